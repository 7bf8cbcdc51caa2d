#include <iostream>

#include "mcinv/cli.hpp"

int main(int argc, char** argv) { return mcinv::cli::run(argc, argv, std::cout, std::cerr); }
