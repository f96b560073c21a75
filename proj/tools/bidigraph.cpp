#include <iostream>

#include "bidigraph/cli.hpp"

int main(int argc, char** argv) { return bidi::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
