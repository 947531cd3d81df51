#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) { return tleaf::cli::run(argc, argv, std::cout, std::cerr); }
