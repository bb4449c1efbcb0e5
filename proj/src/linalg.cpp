#include "toricss/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "toricss/errors.hpp"

namespace toricss {

namespace {

struct ExtendedGcd {
  Integer g, s, t;  // s*a + t*b == g
};

ExtendedGcd xgcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Rows (r, i) <- [[s, t], [u, v]] * (r, i). The 2x2 block must be unimodular.
void combine_rows(IntegerMatrix& m, std::size_t r, std::size_t i, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Integer a = m(r, j);
    const Integer b = m(i, j);
    m(r, j) = s * a + t * b;
    m(i, j) = u * a + v * b;
  }
}


// Uses row `pivot` to zero out entry (i, j), keeping the transform unimodular.
void eliminate_row_entry(IntegerMatrix& m, IntegerMatrix& u, std::size_t pivot, std::size_t i,
                         std::size_t j) {
  const Integer a = m(pivot, j);
  const Integer b = m(i, j);
  if (b == 0) return;
  const auto e = xgcd(a, b);
  const Integer ag = a / e.g;
  const Integer bg = b / e.g;
  combine_rows(m, pivot, i, e.s, e.t, -bg, ag);
  combine_rows(u, pivot, i, e.s, e.t, -bg, ag);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // advance to the next subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

HermiteForm hermite_normal_form(const IntegerMatrix& A) {
  HermiteForm out{A, IntegerMatrix::identity(A.rows())};
  IntegerMatrix& H = out.H;
  IntegerMatrix& U = out.U;
  std::size_t r = 0;
  for (std::size_t j = 0; j < H.cols() && r < H.rows(); ++j) {
    std::size_t k = r;
    while (k < H.rows() && H(k, j) == 0) ++k;
    if (k == H.rows()) continue;
    H.swap_rows(r, k);
    U.swap_rows(r, k);
    for (std::size_t i = r + 1; i < H.rows(); ++i) eliminate_row_entry(H, U, r, i, j);
    if (H(r, j) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(H(i, j), H(r, j));
      H.add_row_multiple(i, r, -q);
      U.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& A) {
  SmithForm out{A, IntegerMatrix::identity(A.rows()), IntegerMatrix::identity(A.cols())};
  IntegerMatrix& D = out.D;
  IntegerMatrix& U = out.U;
  IntegerMatrix& V = out.V;
  const std::size_t m = D.rows();
  const std::size_t n = D.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Euclid on the trailing block: the pivot's absolute value strictly
    // drops every time a remainder survives, so this terminates and keeps
    // entries small.
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Integer q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Integer q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: the pivot must divide the whole trailing block
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      D.add_row_multiple(t, bad, 1);
      U.add_row_multiple(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return out;
}

std::vector<Integer> invariant_factors(const IntegerMatrix& A) {
  const auto snf = smith_normal_form(A);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i)
    if (snf.D(i, i) != 0) out.push_back(snf.D(i, i));
  return out;
}

Lattice Lattice::generated_by(std::size_t ambient_rank, const std::vector<Vector>& generators) {
  const auto G = IntegerMatrix::from_rows(generators, ambient_rank);
  const auto H = hermite_normal_form(G).H;
  Lattice L(ambient_rank);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    Vector r = H.row(i);
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  L.basis_ = IntegerMatrix::from_rows(rows, ambient_rank);
  return L;
}

Lattice Lattice::standard(std::size_t ambient_rank) {
  Lattice L(ambient_rank);
  L.basis_ = IntegerMatrix::identity(ambient_rank);
  return L;
}

std::optional<Vector> Lattice::coordinates(const Vector& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("Lattice::coordinates: dimension mismatch");
  Vector residual = x;
  Vector coords(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    std::size_t p = 0;
    while (basis_(i, p) == 0) ++p;
    for (std::size_t j = 0; j < p; ++j)
      if (residual[j] != 0) return std::nullopt;
    if (residual[p] % basis_(i, p) != 0) return std::nullopt;
    coords[i] = residual[p] / basis_(i, p);
    for (std::size_t j = p; j < ambient_; ++j) residual[j] -= coords[i] * basis_(i, j);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

bool Lattice::is_saturated() const {
  for (const auto& d : invariant_factors(basis_))
    if (d != 1) return false;
  return true;
}

std::string AbelianGroupStructure::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& d : invariant_factors) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

Lattice kernel_lattice(const IntegerMatrix& A) {
  const auto hnf = hermite_normal_form(A.transpose());
  std::vector<Vector> kernel;
  for (std::size_t i = 0; i < hnf.H.rows(); ++i)
    if (is_zero(hnf.H.row(i))) kernel.push_back(hnf.U.row(i));
  return Lattice::generated_by(A.cols(), kernel);
}

AbelianGroupStructure cokernel_structure(const IntegerMatrix& A) {
  AbelianGroupStructure g;
  const auto factors = invariant_factors(A);
  g.free_rank = A.rows() - factors.size();
  for (const auto& d : factors)
    if (d > 1) g.invariant_factors.push_back(d);
  return g;
}

IntegerMatrix exterior_power_map(const IntegerMatrix& f, std::size_t a) {
  const auto row_sets = subsets(f.rows(), a);
  const auto col_sets = subsets(f.cols(), a);
  IntegerMatrix out(row_sets.size(), col_sets.size());
  IntegerMatrix minor(a, a);
  for (std::size_t I = 0; I < row_sets.size(); ++I)
    for (std::size_t J = 0; J < col_sets.size(); ++J) {
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) minor(i, j) = f(row_sets[I][i], col_sets[J][j]);
      out(I, J) = determinant(minor);
    }
  return out;
}

AbelianGroupStructure complex_cohomology(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw std::invalid_argument("complex_cohomology: d_in target does not match d_out source");
  if (!(d_out * d_in).is_zero())
    throw NotAComplexError("complex_cohomology: not a complex (d_out * d_in != 0)");
  const Lattice K = kernel_lattice(d_out);
  // image of d_in written in the kernel basis
  IntegerMatrix Y(K.rank(), d_in.cols());
  for (std::size_t j = 0; j < d_in.cols(); ++j) {
    const auto c = K.coordinates(d_in.col(j));
    if (!c) throw std::logic_error("complex_cohomology: image not inside kernel");
    for (std::size_t i = 0; i < K.rank(); ++i) Y(i, j) = (*c)[i];
  }
  return cokernel_structure(Y);
}

}  // namespace toricss
