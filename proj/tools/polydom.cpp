#include <iostream>

#include "polydom/cli.hpp"

int main(int argc, char** argv) { return polydom::cli::run(argc, argv, std::cout, std::cerr); }
