#include <iostream>

#include "deq/cli.hpp"

int main(int argc, char** argv) { return deq::cli::main_entry(argc, argv, std::cout, std::cerr); }
