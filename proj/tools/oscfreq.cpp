#include <iostream>

#include "oscfreq/cli.hpp"

int main(int argc, char** argv) { return oscfreq::cli::main(argc, argv, std::cout, std::cerr); }
