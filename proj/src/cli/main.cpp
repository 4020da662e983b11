#include <iostream>

#include "wildsets/cli.hpp"

int main(int argc, char** argv) {
  return wildsets::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
