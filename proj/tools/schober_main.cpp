#include <iostream>

#include "schober/schobercli.hpp"

int main(int argc, char** argv) { return schober::run_cli(argc, argv, std::cout, std::cerr); }
