// Runs the acceptance suite: one line per criterion, exit status 0 iff all pass.
#include <cstdio>
#include <iostream>

#include "toricss/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : toricss::acceptance::run_all()) {
    std::cout << toricss::acceptance::format(r) << "  (" << r.seconds << " s of " << r.budget << ")\n";
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
