#include <iostream>

#include "nilid/cli.hpp"

int main(int argc, char** argv) {
  return nilid::cli::run(argc, argv, std::cout, std::cerr);
}
