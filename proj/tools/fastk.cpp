#include <iostream>

#include "fastk/cli.hpp"

int main(int argc, char** argv) { return fastk::cli_main(argc, argv, std::cout, std::cerr); }
