#include <iostream>

#include "invhilb/cli/commands.hpp"

int main(int argc, char** argv) { return invhilb::cli::run_cli(argc, argv, std::cout, std::cerr); }
