#include <iostream>

#include "sposet/cli.hpp"

int main(int argc, char** argv) { return sposet::cli::run(argc, argv, std::cout, std::cerr); }
