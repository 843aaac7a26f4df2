#include <iostream>

#include "vkc/cli.hpp"

int main(int argc, char** argv) { return vkc::run_cli(argc, argv, std::cout, std::cerr); }
