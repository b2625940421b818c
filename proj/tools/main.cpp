#include <iostream>

#include "barely/cli.hpp"

int main(int argc, char** argv) { return barely::cli::run(argc, argv, std::cout, std::cerr); }
