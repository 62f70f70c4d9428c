#include <iostream>

#include "fria/cli/cli.h"

int main(int argc, char** argv) { return fria::cli::run(argc, argv, std::cout, std::cerr); }
