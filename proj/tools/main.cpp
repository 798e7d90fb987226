#include <iostream>

#include "cubicloop/cli.hpp"

int main(int argc, char** argv) { return cubicloop::run_cli(argc, argv, std::cout, std::cerr); }
