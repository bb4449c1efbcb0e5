#include "toricss/oracles.hpp"

#include <algorithm>

namespace toricss::oracle {

Integer determinant_by_expansion(const IntegerMatrix& A) {
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  if (n == 1) return A(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (A(0, j) == 0) continue;
    IntegerMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k) {
        if (k == j) continue;
        sub(i - 1, c++) = A(i, k);
      }
    const Integer term = A(0, j) * determinant_by_expansion(sub);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

namespace {

Integer minor_gcd(const IntegerMatrix& A, std::size_t k) {
  Integer g = 0;
  IntegerMatrix m(k, k);
  for (const auto& rows : subsets(A.rows(), k))
    for (const auto& cols : subsets(A.cols(), k)) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = A(rows[i], cols[j]);
      g = gcd(g, determinant_by_expansion(m));
    }
  return g;
}

}  // namespace

std::vector<Integer> invariant_factors_by_minors(const IntegerMatrix& A) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(A.rows(), A.cols()); ++k) {
    const Integer dk = minor_gcd(A, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

std::size_t rank_by_minors(const IntegerMatrix& A) { return invariant_factors_by_minors(A).size(); }

AbelianGroupStructure complex_cohomology_by_minors(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  AbelianGroupStructure g;
  const auto f_in = invariant_factors_by_minors(d_in);
  g.free_rank = d_in.rows() - rank_by_minors(d_out) - f_in.size();
  for (const auto& d : f_in)
    if (d > 1) g.invariant_factors.push_back(d);
  return g;
}

UnimodularPair random_unimodular(std::size_t n, std::mt19937_64& rng, int steps) {
  UnimodularPair p{IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
  if (n < 2) {
    if (n == 1 && rng() % 2) {
      p.matrix(0, 0) = -1;
      p.inverse(0, 0) = -1;
    }
    return p;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (j + 1) % n;
    const long c = coef(rng);
    // E = I + c e_ij; E^{-1} = I - c e_ij
    p.matrix.add_row_multiple(i, j, c);
    p.inverse.add_col_multiple(j, i, -c);
  }
  return p;
}

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

RandomComplex random_complex(std::size_t max_total, std::mt19937_64& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::size_t b, r1, r2;
  do {
    b = pick(1, max_total);
    r1 = pick(0, b);
    r2 = pick(0, b - r1);
  } while (b + r1 + r2 > max_total);
  const std::size_t h = b - r1 - r2;
  const std::size_t slack = max_total - b - r1 - r2;
  const std::size_t a = r1 + pick(0, slack);
  const std::size_t c = r2 + pick(0, slack - (a - r1));

  IntegerMatrix din(b, a), dout(c, b);
  std::uniform_int_distribution<long> t(1, 6);
  IntegerMatrix torsion_diag(r1, r1);
  for (std::size_t i = 0; i < r1; ++i) {
    din(i, i) = t(rng);
    torsion_diag(i, i) = din(i, i);
  }
  for (std::size_t j = 0; j < r2; ++j) dout(j, r1 + h + j) = t(rng);

  const auto P = random_unimodular(b, rng);
  const auto Q = random_unimodular(a, rng);
  const auto S = random_unimodular(c, rng);
  RandomComplex out;
  out.d_in = P.matrix * din * Q.matrix;
  out.d_out = S.matrix * dout * P.inverse;
  out.homology.free_rank = h;
  for (const auto& d : invariant_factors_by_minors(torsion_diag))
    if (d > 1) out.homology.invariant_factors.push_back(d);
  return out;
}

bool is_diagonal_chain(const IntegerMatrix& D) {
  Integer prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j) {
      if (i != j && D(i, j) != 0) return false;
      if (i != j) continue;
      const Integer& d = D(i, i);
      if (d < 0) return false;
      if (d == 0) {
        seen_zero = true;
        continue;
      }
      if (seen_zero || d % prev != 0) return false;
      prev = d;
    }
  return true;
}

bool is_row_hermite(const IntegerMatrix& H) {
  std::size_t last_pivot = 0;
  bool first = true, zero_seen = false;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    std::size_t p = H.cols();
    for (std::size_t j = 0; j < H.cols(); ++j)
      if (H(i, j) != 0) {
        p = j;
        break;
      }
    if (p == H.cols()) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;
    if (!first && p <= last_pivot) return false;
    if (H(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (H(k, p) < 0 || H(k, p) >= H(i, p)) return false;
    first = false;
    last_pivot = p;
  }
  return true;
}

std::vector<Vector> box_points(std::size_t n, long bound) {
  std::vector<Vector> out;
  Vector x(n, -bound);
  while (true) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) {
      x[i] = -bound;
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return out;
}

}  // namespace toricss::oracle
