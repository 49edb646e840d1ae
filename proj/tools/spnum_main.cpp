#include <iostream>

#include "spnum/cli.hpp"

int main(int argc, char** argv) {
  return spnum::cli::run(argc, argv, std::cout, std::cerr);
}
