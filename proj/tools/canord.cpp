#include "canord/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return canord::cli::run(argc, argv, std::cout, std::cerr); }
