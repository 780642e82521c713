#include <iostream>

#include "loophw/cli.hpp"

int main(int argc, char** argv) { return loophw::run_cli(argc, argv, std::cout, std::cerr); }
