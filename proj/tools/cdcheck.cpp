#include <iostream>

#include "cedille/cli.hpp"

int main(int argc, char** argv) { return cedille::cli::main(argc, argv, std::cout, std::cerr); }
