#include <iostream>

#include "itbatch/cli.hpp"

int main(int argc, char** argv) { return itbatch::run_cli(argc, argv, std::cout, std::cerr); }
