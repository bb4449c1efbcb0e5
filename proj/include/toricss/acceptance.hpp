// The end-to-end acceptance suite: nine exact checks, each with a time budget.
#pragma once

#include <string>
#include <vector>

namespace toricss::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic summary; no timings
  double seconds = 0;
  double budget = 0;
};

std::vector<CriterionResult> run_all();

/// "PASS  1 cech-vs-betti: ..." (one line, no timing, byte-stable across runs).
std::string format(const CriterionResult& r);

}  // namespace toricss::acceptance
