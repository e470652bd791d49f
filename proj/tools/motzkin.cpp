#include <iostream>

#include "motzkin/cli/app.hpp"

int main(int argc, char** argv) { return motzkin::cli::run(argc, argv, std::cout, std::cerr); }
