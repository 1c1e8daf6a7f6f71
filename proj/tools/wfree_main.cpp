#include <iostream>

#include "wfree/cli.hpp"

int main(int argc, char** argv) { return wfree::run_cli(argc, argv, std::cout, std::cerr); }
