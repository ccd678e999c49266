#include "hv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hv::cli_main(argc, argv, std::cout, std::cerr); }
