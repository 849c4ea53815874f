#include "ncc/surface.hpp"

#include <cstdio>

int main() {
  std::puts("ncc: subcommands not wired up yet");
  return 2;
}
