// Normal forms, lattices and homology of integer complexes.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricss/matrix.hpp"

namespace toricss {

/// Binomial coefficient C(n, k); zero when k > n.
std::size_t binomial(std::size_t n, std::size_t k);

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U;  // unimodular, U * A == H
};

/**
 * Row-style Hermite normal form. H is in row echelon form, every pivot is
 * positive and the entries above a pivot lie in [0, pivot). Zero rows are
 * at the bottom.
 */
HermiteForm hermite_normal_form(const IntegerMatrix& A);

struct SmithForm {
  IntegerMatrix D;
  IntegerMatrix U;  // unimodular, U * A * V == D
  IntegerMatrix V;  // unimodular
};

/// Smith normal form with nonnegative diagonal d1 | d2 | ... (zeros last).
SmithForm smith_normal_form(const IntegerMatrix& A);

/// Nonzero diagonal of a Smith form, in order.
std::vector<Integer> invariant_factors(const IntegerMatrix& A);

/**
 * Subgroup of Z^n given by a basis. The basis is kept in Hermite normal
 * form, which makes it canonical: two lattices are equal iff their bases
 * are equal.
 */
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

  /// Subgroup generated by arbitrary (possibly dependent) vectors.
  static Lattice generated_by(std::size_t ambient_rank, const std::vector<Vector>& generators);
  static Lattice standard(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntegerMatrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Integer coordinates of x in the basis, or nullopt if x is not in the lattice.
  std::optional<Vector> coordinates(const Vector& x) const;
  bool contains(const Vector& x) const { return coordinates(x).has_value(); }
  bool contains(const Lattice& other) const;
  /// True iff Z^n / L is torsion free.
  bool is_saturated() const;

  bool operator==(const Lattice& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  IntegerMatrix basis_;
};

/// Z^r + Z/d1 + ... + Z/dk with d1 | d2 | ... and every di > 1.
struct AbelianGroupStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;

  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  bool operator==(const AbelianGroupStructure& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
  /// e.g. "Z^2 + Z/2 + Z/4"; "0" for the trivial group.
  std::string to_string() const;
};

/// Saturated integer kernel {x in Z^cols : A x = 0}.
Lattice kernel_lattice(const IntegerMatrix& A);

/// Structure of Z^rows / image(A).
AbelianGroupStructure cokernel_structure(const IntegerMatrix& A);

/**
 * Matrix of the a-th exterior power of f : Z^cols -> Z^rows in the bases
 * e_I (I ranging over a-subsets in lexicographic order). Entry (I, J) is
 * the minor of f on rows I and columns J. Lambda^0 f = [1].
 */
IntegerMatrix exterior_power_map(const IntegerMatrix& f, std::size_t a);

/**
 * ker(d_out) / im(d_in) for Z^a --d_in--> Z^b --d_out--> Z^c.
 * Throws NotAComplexError unless d_out * d_in == 0.
 */
AbelianGroupStructure complex_cohomology(const IntegerMatrix& d_in, const IntegerMatrix& d_out);

}  // namespace toricss
