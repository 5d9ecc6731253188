#include <iostream>

#include "flatlab_cli/app.hpp"

int main(int argc, char** argv) { return flatlab::cli::run(argc, argv, std::cout, std::cerr); }
