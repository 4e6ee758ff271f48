// Acceptance criteria 1-11, one line each. Exit status is nonzero if any fails.
#include <iostream>

#include "cmc/verify.hpp"

int main() { return cmc::verify_main(std::cout); }
