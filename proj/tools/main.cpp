#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tdorbit::cli::run(argc, argv, std::cout, std::cerr); }
