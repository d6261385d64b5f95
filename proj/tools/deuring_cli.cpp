#include <iostream>

#include "deuring/cli.hpp"

int main(int argc, char** argv) { return deuring::run_cli(argc, argv, std::cout, std::cerr); }
