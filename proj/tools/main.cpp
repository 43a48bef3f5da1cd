#include <iostream>

#include "supent/harness/cli.hpp"

int main(int argc, char** argv) { return supent::harness::cli_main(argc, argv, std::cout, std::cerr); }
