#include <iostream>

#include "qfa/cli.hpp"

int main(int argc, char** argv) { return qfa::run_cli(argc, argv, std::cout, std::cerr); }
