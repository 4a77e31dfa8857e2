#include <iostream>

#include "nilcmetrix/cli.hpp"

int main(int argc, char** argv) {
  return nilcmetrix::run_cli(argc, argv, std::cout, std::cerr);
}
