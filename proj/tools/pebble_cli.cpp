#include "pebble/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pebble::run_cli(argc, argv, std::cout, std::cerr); }
