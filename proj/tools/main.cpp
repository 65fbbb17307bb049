#include "weilcodes/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return weilcodes::run_cli(argc, argv, std::cout, std::cerr); }
