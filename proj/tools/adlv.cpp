#include <iostream>

#include "adlv/cli.hpp"

int main(int argc, char** argv) {
  return adlv::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
