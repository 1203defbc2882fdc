#include <iostream>

#include "tft/cli.hpp"

int main(int argc, char** argv) { return tft::cli::run_command(argc, argv, std::cout, std::cerr); }
