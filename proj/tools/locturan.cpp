#include <iostream>

#include "locturan/cli.hpp"

int main(int argc, char** argv) { return locturan::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
