#!/usr/bin/env python3
"""Solve emitted LP files with scipy's MILP and compare against the
"solver optimum" comment written by `edge-placer emit-lp`.

usage: lp_crosscheck.py MODEL.lp [MODEL.lp ...]
"""
import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

TERM = re.compile(r"([+-])?\s*([0-9.eE+-]+)\s+([A-Za-z_][A-Za-z0-9_.]*)")


def parse_terms(text):
    out = {}
    for sign, coef, var in TERM.findall(text):
        out[var] = out.get(var, 0.0) + (-1.0 if sign == "-" else 1.0) * float(coef)
    return out


def parse_lp(text):
    expected, objective, rows, binaries, section = None, {}, [], [], None
    for line in text.splitlines():
        if line.startswith("\\"):
            m = re.match(r"\\ solver optimum (\S+)", line)
            if m:
                expected = None if m.group(1) == "infeasible" else float(m.group(1))
            continue
        if line in ("Minimize", "Subject To", "Binary", "End"):
            section = line
            continue
        if section == "Minimize":
            objective = parse_terms(line.split(":", 1)[1])
        elif section == "Subject To":
            body = line.split(":", 1)[1]
            m = re.search(r"\s(<=|=|>=)\s(\S+)$", body)
            rows.append((parse_terms(body[: m.start()]), m.group(1), float(m.group(2))))
        elif section == "Binary":
            binaries.append(line.strip())
    return expected, objective, rows, binaries


def solve(objective, rows, binaries):
    index = {v: i for i, v in enumerate(binaries)}
    c = np.array([objective.get(v, 0.0) for v in binaries])
    a = np.zeros((len(rows), len(binaries)))
    lo, hi = np.full(len(rows), -np.inf), np.full(len(rows), np.inf)
    for r, (coef, sense, rhs) in enumerate(rows):
        for v, k in coef.items():
            a[r, index[v]] = k
        if sense in ("<=", "="):
            hi[r] = rhs
        if sense in (">=", "="):
            lo[r] = rhs
    res = milp(c, constraints=LinearConstraint(a, lo, hi), integrality=np.ones(len(binaries)),
               bounds=Bounds(0, 1))
    return res.fun if res.status == 0 else None


def main(paths):
    bad = 0
    for path in paths:
        with open(path) as f:
            expected, objective, rows, binaries = parse_lp(f.read())
        got = solve(objective, rows, binaries)
        ok = (got is None and expected is None) or (
            got is not None and expected is not None and abs(got - expected) <= 1e-6)
        bad += not ok
        print(f"{'ok  ' if ok else 'DIFF'} {path}: milp={got} solver={expected}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
