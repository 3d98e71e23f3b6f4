#include <iostream>

#include "hyperlab/cli/cli.hpp"

int main(int argc, char** argv) { return hyperlab::cli::run(argc, argv, std::cout, std::cerr); }
