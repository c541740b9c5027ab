#include <iostream>

#include "dsr/cli.hpp"

int main(int argc, char** argv) { return dsr::cli::run_cli(argc, argv, std::cout, std::cerr); }
