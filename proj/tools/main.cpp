// main.cpp — specsat executable.
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return specsat::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
