#include <iostream>

#include "ietrel_cli.hpp"

int main(int argc, char** argv) { return ietrel::cli::run(argc, argv, std::cout, std::cerr); }
