#include <iostream>

#include "jointinv/cli.hpp"

int main(int argc, char** argv) { return jointinv::cli::run(argc, argv, std::cout, std::cerr); }
