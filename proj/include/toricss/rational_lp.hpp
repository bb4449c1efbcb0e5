// Exact two-phase simplex over the rationals (Bland's rule, dense tableau).
#pragma once

#include <cstddef>
#include <vector>

#include "toricss/matrix.hpp"

namespace toricss {

enum class Relation { LessEqual, Equal, GreaterEqual };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> values;
};

/// maximize c.x subject to linear constraints; each variable is either free or >= 0.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables)
      : free_(variables, false), objective_(variables) {}

  std::size_t variables() const { return free_.size(); }
  void set_free(std::size_t var) { free_.at(var) = true; }
  void set_objective(std::vector<Rational> c);
  void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);

  LpSolution maximize() const;

 private:
  struct Row {
    std::vector<Rational> coefficients;
    Relation relation;
    Rational rhs;
  };
  std::vector<bool> free_;
  std::vector<Rational> objective_;
  std::vector<Row> rows_;
};

}  // namespace toricss
