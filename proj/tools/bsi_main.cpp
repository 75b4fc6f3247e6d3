#include <iostream>

#include "bsi/cli.hpp"

int main(int argc, char** argv) { return bsi::run_cli(argc, argv, std::cout, std::cerr); }
