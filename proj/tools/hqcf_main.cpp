#include <iostream>

#include "hqcf/cli.hpp"

int main(int argc, char** argv) { return hqcf::main_entry(argc, argv, std::cout, std::cerr); }
