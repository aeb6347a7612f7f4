#include <iostream>

#include "rcomm/cli.hpp"

int main(int argc, char** argv) { return rcomm::cli_main(argc, argv, std::cout, std::cerr); }
