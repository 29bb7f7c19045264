#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return combi::cli::run(argc, argv, std::cout, std::cerr); }
