#include <iostream>

#include "quartic/cli.hpp"

int main(int argc, char** argv) { return quartic::cli_main(argc, argv, std::cout, std::cerr); }
