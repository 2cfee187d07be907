#include <iostream>

#include "sympent/cli.hpp"

int main(int argc, char** argv) { return sympent::cli::run(argc, argv, std::cout, std::cerr); }
