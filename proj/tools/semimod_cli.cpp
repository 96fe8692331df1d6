#include <iostream>

#include "semimod/cli.hpp"

int main(int argc, char** argv) {
  return semimod::cli::run(argc, argv, std::cout, std::cerr);
}
