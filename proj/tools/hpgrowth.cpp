#include <iostream>

#include "hpgrowth/cli/commands.hpp"

int main(int argc, char** argv) { return hpgrowth::cli::run(argc, argv, std::cout, std::cerr); }
