#include <iostream>

#include "wgd/cli.hpp"

int main(int argc, char** argv) {
  return wgd::cli::dispatch(argc, argv, std::cout, std::cerr);
}
