#include "toricss/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricss/errors.hpp"

namespace toricss {

Nerve Nerve::build(const Fan& F) {
  Nerve N;
  N.dim_ = F.dim();
  const auto& maxc = F.max_cones();
  const std::size_t n = maxc.size();
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> position(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<NerveTuple> level;
    std::vector<std::vector<std::size_t>> faces;
    std::vector<std::vector<IntegerMatrix>> incl;
    for (auto& I : subsets(n, p + 1)) {
      NerveTuple t;
      if (p == 0) {
        t.cone = maxc[I[0]];
      } else {
        std::vector<std::size_t> head(I.begin(), I.end() - 1);
        t.cone = intersect_cones(N.levels_[p - 1][position[p - 1].at(head)].cone, maxc[I.back()]);
      }
      t.m = m_lattice(t.cone);
      std::vector<std::size_t> f;
      std::vector<IntegerMatrix> inc;
      if (p > 0)
        for (std::size_t j = 0; j <= p; ++j) {
          std::vector<std::size_t> J = I;
          J.erase(J.begin() + static_cast<std::ptrdiff_t>(j));
          const std::size_t pos = position[p - 1].at(J);
          const Lattice& mj = N.levels_[p - 1][pos].m;
          IntegerMatrix A(t.m.rank(), mj.rank());
          for (std::size_t k = 0; k < mj.rank(); ++k) {
            const auto x = t.m.coordinates(mj.basis_vector(k));
            if (!x) throw InternalError("Nerve: M(sigma_J) is not contained in M(sigma_I)");
            for (std::size_t i = 0; i < t.m.rank(); ++i) A(i, k) = (*x)[i];
          }
          f.push_back(pos);
          inc.push_back(std::move(A));
        }
      position[p][I] = level.size();
      t.indices = std::move(I);
      level.push_back(std::move(t));
      faces.push_back(std::move(f));
      incl.push_back(std::move(inc));
    }
    N.levels_.push_back(std::move(level));
    N.faces_.push_back(std::move(faces));
    N.inclusions_.push_back(std::move(incl));
  }
  return N;
}

std::size_t BigradedComplex::rank(std::size_t p, std::size_t q) const {
  if (p > max_p || q > max_q) return 0;
  return ranks[q][p];
}

IntegerMatrix BigradedComplex::incoming(std::size_t p, std::size_t q) const {
  if (p == 0) return IntegerMatrix(rank(0, q), 0);
  return d.at(q).at(p - 1);
}

BigradedComplex build_E1(const Nerve& N) {
  if (N.levels() == 0) throw std::invalid_argument("build_E1: empty nerve");
  BigradedComplex E;
  E.max_p = N.levels() - 1;
  E.max_q = N.ambient_dim();
  E.block_ranks.resize(N.levels());
  for (std::size_t p = 0; p < N.levels(); ++p)
    for (const auto& t : N.level(p)) E.block_ranks[p].push_back(t.m.rank());

  E.ranks.assign(E.max_q + 1, std::vector<std::size_t>(E.max_p + 1, 0));
  E.d.resize(E.max_q + 1);
  for (std::size_t q = 0; q <= E.max_q; ++q) {
    std::vector<std::vector<std::size_t>> offset(E.max_p + 1);
    for (std::size_t p = 0; p <= E.max_p; ++p) {
      std::size_t total = 0;
      for (std::size_t r : E.block_ranks[p]) {
        offset[p].push_back(total);
        total += binomial(r, q);
      }
      E.ranks[q][p] = total;
    }
    for (std::size_t p = 0; p <= E.max_p; ++p) {
      if (p == E.max_p) {
        E.d[q].emplace_back(0, E.ranks[q][p]);
        continue;
      }
      IntegerMatrix D(E.ranks[q][p + 1], E.ranks[q][p]);
      for (std::size_t t = 0; t < N.level(p + 1).size(); ++t)
        for (std::size_t j = 0; j <= p + 1; ++j) {
          const std::size_t J = N.face(p + 1, t, j);
          const IntegerMatrix block = exterior_power_map(N.inclusion(p + 1, t, j), q);
          const int sign = j % 2 == 0 ? 1 : -1;
          for (std::size_t a = 0; a < block.rows(); ++a)
            for (std::size_t b = 0; b < block.cols(); ++b)
              D(offset[p + 1][t] + a, offset[p][J] + b) += sign * block(a, b);
        }
      E.d[q].push_back(std::move(D));
    }
    for (std::size_t p = 0; p + 1 <= E.max_p; ++p)
      if (!(E.d[q][p + 1] * E.d[q][p]).is_zero())
        throw InternalError("build_E1: d1 o d1 != 0 in row " + std::to_string(q));
  }
  return E;
}

BigradedComplex build_E1(const Fan& F) { return build_E1(Nerve::build(F)); }

std::size_t SpectralPage::anti_diagonal(std::size_t m) const {
  std::size_t total = 0;
  for (std::size_t q = 0; q <= std::min(m, max_q); ++q)
    if (m - q <= max_p) total += rational_dim(m - q, q);
  return total;
}

SpectralPage page2(const BigradedComplex& E1) {
  SpectralPage P;
  P.max_p = E1.max_p;
  P.max_q = E1.max_q;
  P.cells.resize(E1.max_q + 1);
  for (std::size_t q = 0; q <= E1.max_q; ++q)
    for (std::size_t p = 0; p <= E1.max_p; ++p)
      P.cells[q].push_back(complex_cohomology(E1.incoming(p, q), E1.outgoing(p, q)));
  return P;
}

namespace {

void require_complete_simplicial(const Fan& F, const char* who) {
  if (!is_complete(F)) throw HypothesisError("complete", std::string(who) + ": the fan is not complete");
  if (!is_simplicial(F)) throw HypothesisError("simplicial", std::string(who) + ": the fan is not simplicial");
}

}  // namespace

BettiNumbers betti_formula(const Fan& F) {
  require_complete_simplicial(F, "betti_formula");
  const std::size_t d = F.dim();
  BettiNumbers B;
  B.sum = 0;
  for (std::size_t p = 0; p <= d; ++p) {
    Integer b = 0;
    for (std::size_t i = p; i <= d; ++i) {
      const Integer term = Integer(binomial(i, p)) * Integer(F.count_of_dimension(d - i));
      b += (i - p) % 2 == 0 ? term : Integer(-term);
    }
    B.even.push_back(b);
    B.sum += b;
  }
  B.max_cones = F.max_cones().size();
  B.sum_rule = B.sum == Integer(B.max_cones);
  return B;
}

PurityReport purity_check(const Fan& F, const SpectralPage& E2) {
  require_complete_simplicial(F, "purity_check");
  PurityReport R;
  for (std::size_t q = 0; q <= E2.max_q; ++q)
    for (std::size_t p = 0; p <= E2.max_p; ++p)
      if (E2.rational_dim(p, q) != 0 && p != q) {
        R.pass = false;
        R.offending.emplace_back(p, q);
      }
  return R;
}

namespace {

IntegerMatrix frobenius_cell(const BigradedComplex& E1, std::size_t p, std::size_t q, const Integer& c) {
  const std::size_t n = E1.rank(p, q);
  IntegerMatrix out(n, n);
  std::size_t offset = 0;
  for (std::size_t r : E1.block_ranks[p]) {
    IntegerMatrix times_c(r, r);
    for (std::size_t i = 0; i < r; ++i) times_c(i, i) = c;
    const IntegerMatrix block = exterior_power_map(times_c, q);
    for (std::size_t a = 0; a < block.rows(); ++a)
      for (std::size_t b = 0; b < block.cols(); ++b) out(offset + a, offset + b) = block(a, b);
    offset += block.rows();
  }
  return out;
}

}  // namespace

FrobeniusReport frobenius_on_E1(const BigradedComplex& E1, const Integer& c) {
  if (c < 1) throw std::invalid_argument("frobenius_on_E1: c must be positive");
  FrobeniusReport R;
  R.c = c;
  R.maps.resize(E1.max_q + 1);
  for (std::size_t q = 0; q <= E1.max_q; ++q) {
    Integer cq;
    mpz_pow_ui(cq.get_mpz_t(), c.get_mpz_t(), q);
    R.row_scalars.push_back(cq);
    for (std::size_t p = 0; p <= E1.max_p; ++p) R.maps[q].push_back(frobenius_cell(E1, p, q, c));
    for (std::size_t p = 0; p <= E1.max_p; ++p) {
      const auto& f = R.maps[q][p];
      for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
          if (f(i, j) != (i == j ? cq : Integer(0))) R.row_eigenvalues = false;
      if (p < E1.max_p && !(E1.d[q][p] * f == R.maps[q][p + 1] * E1.d[q][p])) R.commutes_with_d1 = false;
    }
  }
  return R;
}

bool frobenius_multiplicative(const BigradedComplex& E1, const Integer& c, const Integer& c2) {
  const auto a = frobenius_on_E1(E1, c);
  const auto b = frobenius_on_E1(E1, c2);
  const auto ab = frobenius_on_E1(E1, c * c2);
  for (std::size_t q = 0; q <= E1.max_q; ++q)
    for (std::size_t p = 0; p <= E1.max_p; ++p)
      if (!(ab.maps[q][p] == a.maps[q][p] * b.maps[q][p])) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> weight_graded_pieces(const SpectralPage& E2, std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t q = 0; q <= std::min(m, E2.max_q); ++q)
    if (m - q <= E2.max_p) out.emplace_back(2 * q, E2.rational_dim(m - q, q));
  return out;
}

TorsionBound torsion_bound(std::size_t r) {
  if (r < 2) throw HypothesisError("r >= 2", "torsion_bound: page index must be at least 2");
  TorsionBound T;
  T.r = r;
  T.description = "gcd(c^(q-r+1) (c^(r-1) - 1) : c >= 2, q >= r-1)";
  auto pow = [](long base, std::size_t e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
  };
  const Integer a = pow(2, r - 1) - 1;
  const Integer b = pow(3, r - 1) - 1;
  T.bound = a * b;
  T.empirical_gcd = 0;
  for (long c = 2; c <= 7; ++c)
    for (std::size_t q = r - 1; q <= r + 4; ++q) T.empirical_gcd = gcd(T.empirical_gcd, pow(c, q - r + 1) * (pow(c, r - 1) - 1));
  T.gcd_divides_bound = T.bound % T.empirical_gcd == 0;
  Integer odd = T.empirical_gcd, two = 1;
  while (odd % 2 == 0) {
    odd /= 2;
    two *= 2;
  }
  T.odd_part_ok = a % odd == 0;
  T.two_part_ok = b % two == 0;
  return T;
}

std::map<std::pair<std::size_t, std::size_t>, KSymbolicCell> kh_E1_symbolic(const Nerve& N, std::size_t through_q) {
  std::map<std::pair<std::size_t, std::size_t>, KSymbolicCell> out;
  for (std::size_t p = 0; p < N.levels(); ++p)
    for (std::size_t q = 0; q <= through_q; ++q) {
      KSymbolicCell cell;
      for (std::size_t j = 0; j <= q; ++j) {
        std::size_t mult = 0;
        for (const auto& t : N.level(p)) mult += binomial(t.m.rank(), q - j);
        if (mult > 0) cell.emplace_back(j, mult);
      }
      out[{p, q}] = std::move(cell);
    }
  return out;
}

}  // namespace toricss
