#include "geopack/io.hpp"

#include <iostream>

int main(int argc, char** argv) { return geopack::run_cli(argc, argv, std::cout, std::cerr); }
