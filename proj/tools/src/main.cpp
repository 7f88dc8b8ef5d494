#include <iostream>

#include "pfq_cli/cli.hpp"

int main(int argc, char** argv) { return pfq::cli::run(argc, argv, std::cout, std::cerr); }
