#include <iostream>

#include "ctube/cli.hpp"

int main(int argc, char** argv) { return ctube::run_cli(argc, argv, std::cout, std::cerr); }
