// Fans, lattice polytopes, fan predicates and the standard example catalog.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricss/cone.hpp"

namespace toricss {

/**
 * A finite rational fan, given by its maximal cones. The order of the
 * maximal cones is frozen at construction; every Cech sign downstream is
 * taken relative to it.
 */
class Fan {
 public:
  /// Validates the fan axioms; throws InvalidFanError on failure.
  static Fan from_max_cones(std::size_t dim, std::vector<Cone> max_cones, std::string provenance = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  /// Every cone of the fan, sorted by dimension.
  const std::vector<Cone>& cones() const { return cones_; }
  std::vector<Cone> cones_of_dimension(std::size_t k) const;
  std::size_t count_of_dimension(std::size_t k) const;
  bool contains_cone(const Cone& c) const;

  const std::string& provenance() const { return provenance_; }
  /// True when the fan was built as the normal fan of a polytope.
  bool has_polytope_witness() const { return polytope_witness_; }

  /// Canonical text form: sorted cones, each as its sorted primitive rays.
  std::string canonical_form() const;
  /// Stable 64-bit FNV-1a hash of the canonical form, as 16 hex digits.
  std::string canonical_hash() const;

 private:
  friend class LatticePolytope;
  friend Fan normal_fan(const class LatticePolytope&);

  std::size_t dim_ = 0;
  std::vector<Cone> max_cones_;
  std::vector<Cone> cones_;
  std::string provenance_;
  bool polytope_witness_ = false;
};

/// Full-dimensional lattice polytope stored by its vertices.
class LatticePolytope {
 public:
  /// Convex hull of the points; redundant points are dropped. Throws
  /// HypothesisError if the hull is not full dimensional.
  static LatticePolytope from_points(std::size_t dim, const std::vector<Vector>& points);

  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  /// Facet inequalities (a, b) meaning a.x + b >= 0, one per facet.
  const std::vector<std::pair<Vector, Integer>>& facets() const { return facets_; }

  bool contains(const Vector& x, const Integer& dilation = 1) const;
  bool contains_in_interior(const Vector& x, const Integer& dilation = 1) const;
  /// Lattice points strictly inside the k-fold dilation.
  std::vector<Vector> interior_points_of_dilation(const Integer& k) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> vertices_;
  std::vector<std::pair<Vector, Integer>> facets_;
};

bool is_complete(const Fan& F);
bool is_simplicial(const Fan& F);
bool is_smooth(const Fan& F);

/**
 * Existence of a strictly convex support function, decided by an exact LP
 * that maximizes the wall-crossing slack. Throws HypothesisError on a
 * non-complete fan.
 */
bool is_projective(const Fan& F);

/// Fan of inner normal cones of the vertices (duals of the corner cones).
Fan normal_fan(const LatticePolytope& P);

/**
 * Certifies quasi-projectivity: every cone of F must be a cone of a
 * projective fan. Tries, in order, F itself (complete and projective), the
 * supplied superfan, and the fan of projective space of the same dimension.
 */
struct QuasiProjectiveCertificate {
  bool certified = false;
  std::string witness;  // description of the projective superfan used
};
QuasiProjectiveCertificate certify_quasi_projective(const Fan& F,
                                                    const std::optional<Fan>& superfan = std::nullopt);

/// True iff every cone of `sub` is a cone of `super`.
bool is_subfan(const Fan& sub, const Fan& super);

namespace catalog {

Fan projective_space(std::size_t d);
Fan hirzebruch(long a);
Fan weighted_projective(const std::vector<long>& weights);
Fan product(const Fan& a, const Fan& b);
Fan affine_orthant(std::size_t d);
/// Fan consisting of the zero cone only (the torus).
Fan torus(std::size_t d);

/// Parses expressions like "projective_space(2)", "hirzebruch(1)",
/// "weighted_projective(1,1,2)", "product(projective_space(1),projective_space(1))".
Fan from_expression(const std::string& expr);

}  // namespace catalog

LatticePolytope standard_simplex(std::size_t d);
LatticePolytope unit_cube(std::size_t d);

}  // namespace toricss
