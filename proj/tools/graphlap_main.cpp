#include <iostream>

#include "graphlap/cli.hpp"

int main(int argc, char** argv) { return graphlap::cli::run_cli(argc, argv, std::cout, std::cerr); }
