#include <iostream>

#include "toriclag/cli.hpp"

int main(int argc, char** argv) { return toriclag::cli::run(argc, argv, std::cout, std::cerr); }
