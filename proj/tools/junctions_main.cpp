#include <iostream>

#include "junctions/cli.hpp"

int main(int argc, char** argv) {
  return junctions::cli::run(argc, argv, std::cout, std::cerr);
}
