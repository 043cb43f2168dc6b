#include <iostream>

#include "macdonald/cli.hpp"

int main(int argc, char** argv) {
  return macdonald::cli::run(argc, argv, std::cout, std::cerr);
}
