#include <iostream>

#include "indlab/cli.hpp"

int main(int argc, char** argv) { return indlab::run(argc, argv, std::cout, std::cerr); }
