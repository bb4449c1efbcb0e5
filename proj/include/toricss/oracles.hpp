// Brute-force reference computations used by the tests and the acceptance
// suite. Nothing here calls into the normal-form or double-description code
// paths it is meant to check.
#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "toricss/linalg.hpp"

namespace toricss::oracle {

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors.
std::vector<Integer> invariant_factors_by_minors(const IntegerMatrix& A);

/// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const IntegerMatrix& A);

/// Cofactor-expansion determinant.
Integer determinant_by_expansion(const IntegerMatrix& A);

/**
 * ker(d_out)/im(d_in) without kernels: free rank from ranks, torsion from
 * the minors of d_in (the torsion of ker/im equals the torsion of
 * Z^b / im(d_in) because Z^b / ker(d_out) is torsion free).
 */
AbelianGroupStructure complex_cohomology_by_minors(const IntegerMatrix& d_in, const IntegerMatrix& d_out);

struct UnimodularPair {
  IntegerMatrix matrix;
  IntegerMatrix inverse;
};

/// Product of random elementary operations, with its inverse tracked alongside.
UnimodularPair random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12);

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng);

struct RandomComplex {
  IntegerMatrix d_in;
  IntegerMatrix d_out;
  AbelianGroupStructure homology;  // known from the construction
};

/// A three-term complex of total rank a+b+c <= max_total with prescribed homology,
/// disguised by random unimodular changes of basis.
RandomComplex random_complex(std::size_t max_total, std::mt19937_64& rng);

/// Diagonal, nonnegative, d_1 | d_2 | ... with zeros last.
bool is_diagonal_chain(const IntegerMatrix& D);

/// Row echelon with positive pivots and reduced entries above each pivot.
bool is_row_hermite(const IntegerMatrix& H);

/// Integer points of [-bound, bound]^n.
std::vector<Vector> box_points(std::size_t n, long bound);

/**
 * Hilbert basis of the lattice points of cone(gens) inside a box, by direct
 * reduction: a nonzero point is kept iff it is not the sum of two nonzero
 * points of the cone. `in_cone` decides membership.
 */
template <class InCone>
std::vector<Vector> irreducible_points_in_box(std::size_t n, long bound, InCone in_cone) {
  std::vector<Vector> pts;
  for (auto& p : box_points(n, bound))
    if (!is_zero(p) && in_cone(p)) pts.push_back(p);
  std::vector<Vector> out;
  for (const auto& x : pts) {
    bool reducible = false;
    for (const auto& y : pts) {
      if (y == x) continue;
      const Vector z = x - y;
      if (!is_zero(z) && in_cone(z)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

}  // namespace toricss::oracle
