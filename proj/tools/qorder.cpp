#include "qorder/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qorder::cli::run(argc, argv, std::cout, std::cerr); }
