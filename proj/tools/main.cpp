#include <iostream>

#include "edge_placer/cli.hpp"

int main(int argc, char** argv) { return edge_placer::cli::run_cli(argc, argv, std::cout, std::cerr); }
