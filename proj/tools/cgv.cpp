#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return cgv::cli::run(argc, argv, std::cout, std::cerr, std::getenv("CGV_SEED"));
}
