#include <iostream>

#include "cubiclat/cli.hpp"

int main(int argc, char** argv) { return cubiclat::cli::run(argc, argv, std::cout, std::cerr); }
