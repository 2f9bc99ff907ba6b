#include <iostream>

#include "heavy/cli.hpp"

int main(int argc, char** argv) { return heavy::run_cli(argc, argv, std::cout, std::cerr); }
