#include <iostream>

#include "cuspgroup/cli.hpp"

int main(int argc, char** argv) { return cusp::cli::main(argc, argv, std::cout, std::cerr); }
