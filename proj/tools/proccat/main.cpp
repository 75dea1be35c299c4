#include <iostream>

#include "proccat/cli.hpp"

int main(int argc, char** argv) { return proccat::run_cli(argc, argv, std::cout, std::cerr); }
