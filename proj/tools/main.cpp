#include <iostream>

#include "diagcell/cli.hpp"

int main(int argc, char** argv) { return diagcell::run(argc, argv, std::cout, std::cerr); }
