#include <iostream>

#include "klrpoly/cli.hpp"

int main(int argc, char **argv) { return klrpoly::run_cli(argc, argv, std::cout, std::cerr); }
