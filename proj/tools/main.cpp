#include <iostream>

#include "maxplus/cli.hpp"

int main(int argc, char** argv) { return maxplus::cli::run(argc, argv, std::cout, std::cerr); }
