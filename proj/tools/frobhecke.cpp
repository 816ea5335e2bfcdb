#include <iostream>

#include "frobhecke/cli.hpp"

int main(int argc, char** argv) {
  return fh::cli_main(argc, argv, std::cout, std::cerr);
}
