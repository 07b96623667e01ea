#include "jds/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return jds::cli::main(argc, argv, std::cout, std::cerr); }
