#include <iostream>

#include "knotbrt/cli.hpp"

int main(int argc, char** argv) { return knotbrt::run(argc, argv, std::cin, std::cout, std::cerr); }
