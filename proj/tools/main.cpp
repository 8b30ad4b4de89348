#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return resolvent::cli::run(argc, argv, std::cout, std::cerr); }
