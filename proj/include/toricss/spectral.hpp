// Cech-Mayer-Vietoris first page for the cover of a toric scheme by the
// affine charts of its maximal cones, the E2 page, weights and the
// Frobenius endomorphisms c_*.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toricss/fan.hpp"

namespace toricss {

struct NerveTuple {
  std::vector<std::size_t> indices;  // strictly increasing positions in F.max_cones()
  Cone cone;                         // intersection of the indexed cones
  Lattice m;                         // M(cone)
};

/**
 * All tuples i0 < ... < ip of maximal cones, p = 0 .. n-1. Intersections are
 * computed once, level by level. For every tuple and every position j the
 * nerve stores the tuple with index j removed and the inclusion
 * M(sigma_J) -> M(sigma_I) as a matrix from M(sigma_J)-coordinates to
 * M(sigma_I)-coordinates.
 */
class Nerve {
 public:
  static Nerve build(const Fan& F);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t cover_size() const { return levels_.empty() ? 0 : levels_[0].size(); }
  std::size_t levels() const { return levels_.size(); }
  const std::vector<NerveTuple>& level(std::size_t p) const { return levels_.at(p); }

  /// Position in level p-1 of tuple t of level p with its j-th index removed.
  std::size_t face(std::size_t p, std::size_t t, std::size_t j) const { return faces_.at(p).at(t).at(j); }
  const IntegerMatrix& inclusion(std::size_t p, std::size_t t, std::size_t j) const {
    return inclusions_.at(p).at(t).at(j);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<NerveTuple>> levels_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  std::vector<std::vector<std::vector<IntegerMatrix>>> inclusions_;
};

/**
 * E1^{p,q} = sum over p-tuples I of Lambda^q M(sigma_I), basis by tuple and
 * then lexicographic q-subsets. Row q carries weight q.
 */
struct BigradedComplex {
  std::size_t max_p = 0;  // p ranges over 0 .. max_p
  std::size_t max_q = 0;  // q ranges over 0 .. max_q (the ambient dimension)
  std::vector<std::vector<std::size_t>> block_ranks;  // [p][tuple] = rank M(sigma_I)
  std::vector<std::vector<std::size_t>> ranks;        // [q][p]
  std::vector<std::vector<IntegerMatrix>> d;          // [q][p] : E1^{p,q} -> E1^{p+1,q} (0 rows past max_p)

  std::size_t rank(std::size_t p, std::size_t q) const;
  /// d1 into cell (p,q); the zero map from Z^0 when p == 0.
  IntegerMatrix incoming(std::size_t p, std::size_t q) const;
  const IntegerMatrix& outgoing(std::size_t p, std::size_t q) const { return d.at(q).at(p); }
};

/// Throws InternalError when d1 o d1 != 0.
BigradedComplex build_E1(const Nerve& N);
BigradedComplex build_E1(const Fan& F);

struct SpectralPage {
  std::size_t page = 2;
  std::size_t max_p = 0;
  std::size_t max_q = 0;
  std::vector<std::vector<AbelianGroupStructure>> cells;  // [q][p]

  const AbelianGroupStructure& cell(std::size_t p, std::size_t q) const { return cells.at(q).at(p); }
  std::size_t rational_dim(std::size_t p, std::size_t q) const { return cell(p, q).free_rank; }
  /// Sum of rational dimensions over p + q = m.
  std::size_t anti_diagonal(std::size_t m) const;
  std::size_t total_degree() const { return max_p + max_q; }
};

SpectralPage page2(const BigradedComplex& E1);

struct BettiNumbers {
  std::vector<Integer> even;  // b_0, b_2, ..., b_{2d}
  Integer sum;
  std::size_t max_cones = 0;
  bool sum_rule = false;  // sum == max_cones
};

/// b_{2p} = sum_{i=p}^{d} (-1)^{i-p} C(i,p) #F(d-i). Complete simplicial fans only.
BettiNumbers betti_formula(const Fan& F);

struct PurityReport {
  bool pass = true;
  std::vector<std::pair<std::size_t, std::size_t>> offending;  // (p,q) cells off weight
};

/// Rational E2: odd anti-diagonals vanish and anti-diagonal 2m lives at (m,m).
PurityReport purity_check(const Fan& F, const SpectralPage& E2);

struct FrobeniusReport {
  Integer c;
  std::vector<std::vector<IntegerMatrix>> maps;  // [q][p] endomorphism of E1^{p,q}
  std::vector<Integer> row_scalars;               // c^q
  bool commutes_with_d1 = true;
  bool row_eigenvalues = true;  // maps[q][p] == c^q * identity
};

/// c_* on E1, built cell by cell as Lambda^q of multiplication by c on each M(sigma_I).
FrobeniusReport frobenius_on_E1(const BigradedComplex& E1, const Integer& c);

/// (c c')_* == c_* o c'_* on every cell.
bool frobenius_multiplicative(const BigradedComplex& E1, const Integer& c, const Integer& c2);

/// gr^W_{2q} H^m(V, Q) = dim E2^{m-q,q}; pairs (2q, dimension) for every q with a cell on the anti-diagonal.
std::vector<std::pair<std::size_t, std::size_t>> weight_graded_pieces(const SpectralPage& E2, std::size_t m);

struct TorsionBound {
  std::size_t r = 2;
  std::string description;
  Integer bound;          // (2^{r-1} - 1)(3^{r-1} - 1)
  Integer empirical_gcd;  // gcd of c^{q-r+1}(c^{r-1} - 1), c in 2..7, q in r-1..r+4
  bool gcd_divides_bound = false;
  bool odd_part_ok = false;  // odd part of the gcd divides 2^{r-1} - 1
  bool two_part_ok = false;  // 2-part of the gcd divides 3^{r-1} - 1
};
TorsionBound torsion_bound(std::size_t r);

/// Cell (p,q) of the K-theoretic first page: pairs (j, multiplicity) for the
/// blocks Lambda^{q-j} M(sigma_I) (x) K_j(R), zero multiplicities omitted.
using KSymbolicCell = std::vector<std::pair<std::size_t, std::size_t>>;
std::map<std::pair<std::size_t, std::size_t>, KSymbolicCell> kh_E1_symbolic(const Nerve& N, std::size_t through_q);

}  // namespace toricss
