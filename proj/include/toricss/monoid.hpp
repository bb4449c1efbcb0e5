// Affine monoids: gradings, membership, Hilbert bases, normalization,
// seminormalization, the gap set sn(M) \ M and the K_0 nil-group checks.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricss/cone.hpp"

namespace toricss {

/// Degree functional on gp(M), stored by its values on the Hermite basis of gp(M).
struct Grading {
  Lattice group;
  Vector values;

  /// Throws std::invalid_argument when x is not in gp(M).
  Integer degree(const Vector& x) const;
};

/**
 * Submonoid of Z^rank generated by a finite list. Zero generators and
 * duplicates are dropped; the remaining generators are kept sorted.
 */
class AffineMonoid {
 public:
  AffineMonoid(std::size_t rank, std::vector<Vector> generators);

  std::size_t rank() const { return rank_; }
  const std::vector<Vector>& generators() const { return generators_; }
  const Cone& cone() const { return cone_; }
  const Lattice& group() const { return group_; }

  /// U(M) = 0, i.e. the cone is pointed.
  bool is_positive() const { return cone_.is_pointed(); }
  /// M equals its group of differences (the cone is a linear subspace).
  bool is_group() const { return cone_.rays().empty(); }

  /// Minimizes the total degree of the generators (ties: lexicographically
  /// smallest values). Throws HypothesisError("positive") otherwise.
  const Grading& grading() const;

  /**
   * Exact membership. Positive monoids: depth-first search over generator
   * multiplicities, pruned by the cones of generator suffixes. Groups:
   * lattice membership. Other monoids: HypothesisError("positive").
   */
  bool contains(const Vector& x) const;

  /// Generators lying on a face of the cone; they generate M intersected with the face.
  std::vector<Vector> generators_on(const Cone& face) const;

  bool operator==(const AffineMonoid& o) const { return rank_ == o.rank_ && generators_ == o.generators_; }

 private:
  std::size_t rank_;
  std::vector<Vector> generators_;
  Cone cone_;
  Lattice group_;
  std::vector<Vector> search_order_;  // decreasing degree
  std::vector<Cone> suffix_cones_;
  std::optional<Grading> grading_;
};

Lattice group_of_differences(const AffineMonoid& M);
Lattice units(const AffineMonoid& M);
bool is_positive(const AffineMonoid& M);

/**
 * Minimal generating set of C intersected with L, sorted. C must be pointed
 * (HypothesisError("pointed") otherwise). Triangulation into simplicial
 * cones, fundamental parallelepiped points, then removal of reducible
 * candidates.
 */
std::vector<Vector> hilbert_basis(const Cone& C, const Lattice& L);

/// n(M), generated by the Hilbert basis of the cone of M in gp(M).
AffineMonoid normalization(const AffineMonoid& M);

/**
 * sn(M) = {0} united with gp(M n F) n relint(F) over the nonzero faces F.
 * Generators come from closed parallelepipeds of each face (in the lattice
 * gp(M n F)) and are then minimalized.
 */
AffineMonoid seminormalization(const AffineMonoid& M);

bool in_normalization(const AffineMonoid& M, const Vector& x);
bool in_seminormalization(const AffineMonoid& M, const Vector& x);

bool is_normal(const AffineMonoid& M);
bool is_seminormal(const AffineMonoid& M);

/// Outcome of testing "2x, 3x in M implies x in M" on n(M) \ M up to a degree bound.
struct SeminormalityCrossCheck {
  bool consistent = true;
  std::optional<Vector> witness;  // x not in M with 2x, 3x in M
};
SeminormalityCrossCheck cross_check_seminormality(const AffineMonoid& M, const Integer& bound);

/// All elements of the monoid generated by `gens` with degree <= bound, sorted by (degree, lex).
std::vector<Vector> elements_up_to_degree(const std::vector<Vector>& gens, const Grading& grading,
                                          const Integer& bound);

/**
 * sn(M) \ M up to a degree bound. When `truncated` is false the list is the
 * whole gap: no parallelepiped of ray elements of M exceeds the bound and no
 * gap element sits in the top window (bound - W, bound], W the largest
 * degree of those ray elements. Otherwise the list is complete only up to
 * the bound.
 */
struct GapModule {
  std::vector<Vector> elements;
  Integer bound;
  bool truncated = true;
  Integer parallelepiped_degree;  // D above
  Integer window;                 // W above
};
GapModule gap(const AffineMonoid& M, const Integer& bound);

/// Largest degree of a closed parallelepiped spanned by minimal-degree ray
/// elements of M over the simplices of every face's triangulation.
Integer parallelepiped_degree(const AffineMonoid& M);

struct ConductorCertificate {
  Cone face;
  bool found = false;
  Vector element;                       // m_F
  Integer degree;
  std::vector<Vector> module_generators;  // n(M n F) = union of p + (M n F) over these p
  Integer search_degree;                 // elements of M n relint(F) examined up to this degree
  bool avoids_gap = true;                // no listed gap element lies in m_F + F
};

/**
 * Minimal-degree m in M n relint(F) (ties lexicographic) with
 * m + n(M n F) contained in M. Never claims nonexistence: `found` is false
 * only when the search degree is exhausted.
 */
ConductorCertificate conductor_element(const AffineMonoid& M, const Cone& face, const Integer& search_degree,
                                       const GapModule* gap_module = nullptr);

struct FrobeniusImage {
  Vector source;
  std::optional<Vector> target;  // c x when it is still a gap element
};

struct FrobeniusOnGap {
  Integer c;
  std::vector<FrobeniusImage> images;
  bool support_law = true;  // Supp(c_* x) contained in {c x}
  bool is_zero = true;
};
FrobeniusOnGap frobenius_on_gap(const AffineMonoid& M, const Integer& c, const GapModule& G);

struct NilpotenceWitness {
  std::optional<Integer> c0;     // least c >= 2 with c_* = 0, searched up to `limit`
  bool kills_every_c_at_least_2 = false;  // 2x and 3x in M for every listed x
  std::vector<std::pair<Vector, std::optional<Integer>>> stable_from;  // least c with c'x in M for all c' >= c
};
NilpotenceWitness nilpotence_witness(const AffineMonoid& M, const GapModule& G, unsigned limit = 64);

enum class Verdict { Pass, Fail, VerifiedUpToBound, Inconclusive };
std::string to_string(Verdict v);

struct ClauseReport {
  std::string clause;
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

struct ConjectureK0Report {
  GapModule gap;
  std::vector<ConductorCertificate> conductors;  // one per nonzero face
  std::vector<FrobeniusOnGap> frobenius;          // c = 2, 3, 5
  NilpotenceWitness nilpotence;
  std::vector<Vector> module_generators;          // M-minimal gap elements (the finite J)
  bool gap_finite_known = false;
  std::vector<ClauseReport> clauses;              // a, b, c, d

  bool passed() const;
};
ConjectureK0Report verify_conjecture_k0(const AffineMonoid& M, const Integer& bound);

}  // namespace toricss
