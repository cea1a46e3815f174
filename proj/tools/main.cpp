#include <iostream>

#include "seqfree/cli/cli.hpp"

int main(int argc, char** argv) { return seqfree::cli::main_entry(argc, argv, std::cout, std::cerr); }
