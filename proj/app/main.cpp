#include "stokes/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return stokes::dispatch(argc, argv, std::cout, std::cerr); }
