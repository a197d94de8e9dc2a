#include <iostream>

#include "etaq/cli/commands.hpp"

int main(int argc, char** argv) { return etaq::cli::run(argc, argv, std::cout, std::cerr); }
