#include <iostream>

#include "neno/cli.hpp"

int main(int argc, char** argv) { return neno::run_cli(argc, argv, std::cout, std::cerr); }
