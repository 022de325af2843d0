#include <iostream>

#include "choquet/cli.hpp"

int main(int argc, char** argv) { return choquet::run_cli(argc, argv, std::cout, std::cerr); }
