#include <iostream>

#include "glr/cli.hpp"

int main(int argc, char** argv) {
  return glr::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
