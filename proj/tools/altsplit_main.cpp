#include <iostream>

#include "altsplit/cli.hpp"

int main(int argc, char** argv) { return altsplit::run_cli(argc, argv, std::cout, std::cerr); }
