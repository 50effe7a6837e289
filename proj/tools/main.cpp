#include <iostream>

#include "mero/cli.hpp"

int main(int argc, char** argv) { return mero::cli::run(argc, argv, std::cout, std::cerr); }
