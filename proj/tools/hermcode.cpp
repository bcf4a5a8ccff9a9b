#include <iostream>

#include "hermitian/cli.hpp"

int main(int argc, char** argv) { return hermitian::run_cli(argc, argv, std::cout, std::cerr); }
