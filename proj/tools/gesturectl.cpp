#include <iostream>

#include "gesture/cli.hpp"

int main(int argc, char** argv) { return gesture::cli::run(argc, argv, std::cout, std::cerr); }
