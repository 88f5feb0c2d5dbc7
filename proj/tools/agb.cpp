#include <iostream>

#include "agb/cli.hpp"

int main(int argc, char** argv) { return agb::cli::run(argc, argv, std::cout, std::cerr); }
