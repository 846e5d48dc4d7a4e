#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace edge_placer {

// Absolute tolerance for all money/seconds/capacity comparisons.
inline constexpr double kTolerance = 1e-9;

inline bool approx_equal(double a, double b) { return std::fabs(a - b) <= kTolerance; }
inline bool approx_le(double a, double b) { return a <= b + kTolerance; }

/// Shortest text that parses back to the same double.
std::string format_roundtrip(double v);

/// Fixed-point text with `decimals` digits after the point.
std::string format_fixed(double v, int decimals);

/// Strict full-string parse; nullopt on trailing garbage or non-finite values.
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_integer(std::string_view s);

std::string_view trim(std::string_view s);

}  // namespace edge_placer
