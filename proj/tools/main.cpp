#include <iostream>

#include "toricqh/corpus_io.hpp"

int main(int argc, char** argv) { return toricqh::run_cli(argc, argv, std::cout, std::cerr); }
