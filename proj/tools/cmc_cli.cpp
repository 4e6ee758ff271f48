#include <iostream>

#include "cmc/cli_io.hpp"

int main(int argc, char** argv) { return cmc::cli_main(argc, argv, std::cout, std::cerr); }
