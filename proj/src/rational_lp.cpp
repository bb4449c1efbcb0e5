#include "toricss/rational_lp.hpp"

#include <optional>
#include <stdexcept>

namespace toricss {

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<std::size_t> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  // Maximizes c over the current basis. Columns flagged in `blocked` never enter.
  LpStatus optimize(const std::vector<Rational>& c, const std::vector<bool>& blocked) {
    const std::size_t n = c.size();
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n && !entering; ++j) {
        if (blocked[j] || is_basic(j)) continue;
        Rational reduced = c[j];
        for (std::size_t i = 0; i < a_.size(); ++i) reduced -= c[basis_[i]] * a_[i][j];
        if (reduced > 0) entering = j;
      }
      if (!entering) return LpStatus::Optimal;
      const std::size_t j = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][j] <= 0) continue;
        const Rational ratio = b_[i] / a_[i][j];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return LpStatus::Unbounded;
      pivot(*leaving, j);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    const Rational p = a_[r][j];
    for (auto& x : a_[r]) x /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][j] == 0) continue;
      const Rational f = a_[i][j];
      for (std::size_t k = 0; k < a_[i].size(); ++k) a_[i][k] -= f * a_[r][k];
      b_[i] -= f * b_[r];
    }
    basis_[r] = j;
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  Rational value(const std::vector<Rational>& c) const {
    Rational v = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) v += c[basis_[i]] * b_[i];
    return v;
  }

  std::vector<Rational> solution(std::size_t n) const {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < a_.size(); ++i) x[basis_[i]] = b_[i];
    return x;
  }

  std::vector<std::vector<Rational>>& rows() { return a_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
};

}  // namespace

void LinearProgram::set_objective(std::vector<Rational> c) {
  if (c.size() != variables()) throw std::invalid_argument("LinearProgram: objective size mismatch");
  objective_ = std::move(c);
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != variables())
    throw std::invalid_argument("LinearProgram: constraint size mismatch");
  rows_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

LpSolution LinearProgram::maximize() const {
  // Standard form columns: x+ (and x- for free variables), then one slack per
  // inequality, then one artificial per row.
  std::vector<std::size_t> pos(variables()), neg(variables(), 0);
  std::size_t n = 0;
  for (std::size_t v = 0; v < variables(); ++v) {
    pos[v] = n++;
    if (free_[v]) neg[v] = n++;
  }
  std::vector<std::size_t> slack(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].relation != Relation::Equal) slack[i] = n++;
  const std::size_t first_artificial = n;
  n += rows_.size();

  std::vector<std::vector<Rational>> a(rows_.size(), std::vector<Rational>(n));
  std::vector<Rational> b(rows_.size());
  std::vector<std::size_t> basis(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& row = rows_[i];
    for (std::size_t v = 0; v < variables(); ++v) {
      a[i][pos[v]] = row.coefficients[v];
      if (free_[v]) a[i][neg[v]] = -row.coefficients[v];
    }
    if (row.relation == Relation::LessEqual) a[i][slack[i]] = 1;
    if (row.relation == Relation::GreaterEqual) a[i][slack[i]] = -1;
    b[i] = row.rhs;
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
    a[i][first_artificial + i] = 1;
    basis[i] = first_artificial + i;
  }

  Tableau tab(std::move(a), std::move(b), std::move(basis));
  std::vector<Rational> phase1(n);
  for (std::size_t j = first_artificial; j < n; ++j) phase1[j] = -1;
  std::vector<bool> blocked(n, false);
  tab.optimize(phase1, blocked);

  LpSolution out;
  if (tab.value(phase1) < 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  // drive zero-valued artificials out of the basis where possible
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (tab.basis()[i] < first_artificial) continue;
    for (std::size_t j = 0; j < first_artificial; ++j)
      if (tab.rows()[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
  }
  for (std::size_t j = first_artificial; j < n; ++j) blocked[j] = true;

  std::vector<Rational> phase2(n);
  for (std::size_t v = 0; v < variables(); ++v) {
    phase2[pos[v]] = objective_[v];
    if (free_[v]) phase2[neg[v]] = -objective_[v];
  }
  if (tab.optimize(phase2, blocked) == LpStatus::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  const auto x = tab.solution(n);
  out.status = LpStatus::Optimal;
  out.objective = tab.value(phase2);
  out.values.resize(variables());
  for (std::size_t v = 0; v < variables(); ++v) {
    out.values[v] = x[pos[v]];
    if (free_[v]) out.values[v] -= x[neg[v]];
  }
  return out;
}

}  // namespace toricss
