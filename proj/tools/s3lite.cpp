#include <unistd.h>

#include <iostream>

#include "s3lite/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  s3lite::cli::Terminal terminal{isatty(STDIN_FILENO) != 0, isatty(STDERR_FILENO) != 0};
  return s3lite::cli::run(argc, argv, std::cin, std::cout, std::cerr, terminal);
}
