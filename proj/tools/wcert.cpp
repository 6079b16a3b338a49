#include <iostream>

#include "wcert/cli.hpp"

int main(int argc, char** argv) { return wcert::cli::run(argc, argv, std::cout, std::cerr); }
