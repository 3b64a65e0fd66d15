#include <iostream>

#include "momentforge/cli.hpp"

int main(int argc, char** argv)
{
  return momentforge::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
