#include <iostream>

#include "palette/cli.hpp"

int main(int argc, char** argv) { return palette::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
