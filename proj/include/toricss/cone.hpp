// Rational polyhedral cones with both generator and inequality descriptions.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricss/linalg.hpp"

namespace toricss {

struct DoubleDescription {
  std::vector<Vector> rays;       // primitive extreme rays of the pointed part
  std::vector<Vector> lineality;  // Hermite basis of the lineality space
};

/**
 * Minimal generators of {x : a.x >= 0 for every row a}. The pointed part is
 * taken inside the orthogonal complement of the lineality space, so the
 * output depends only on the cone. Incremental insertion of inequalities
 * with an algebraic adjacency test.
 */
DoubleDescription extreme_rays(std::size_t dim, const std::vector<Vector>& inequalities);

/**
 * A rational polyhedral cone in R^d. Stored canonically: sorted primitive
 * extreme rays, a Hermite basis of the lineality space, sorted primitive
 * facet normals (relative to the linear span) and a Hermite basis of the
 * equations cutting out the span.
 */
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t dim, const std::vector<Vector>& generators);
  static Cone from_inequalities(std::size_t dim, const std::vector<Vector>& inequalities,
                                const std::vector<Vector>& equations = {});
  static Cone zero(std::size_t dim) { return from_generators(dim, {}); }
  static Cone whole_space(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dimension() const { return dim_ - equations_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_simplicial() const { return is_pointed() && rays_.size() == dimension(); }

  const std::vector<Vector>& rays() const { return rays_; }
  const std::vector<Vector>& lineality() const { return lineality_; }
  /// Rays plus both signs of each lineality basis vector.
  std::vector<Vector> generators() const;
  /// Inward normals f with f.x >= 0 on the cone; one per facet.
  const std::vector<Vector>& facet_normals() const { return facets_; }
  /// Basis of the integer covectors vanishing on the cone's span.
  const std::vector<Vector>& equations() const { return equations_; }

  bool contains(const Vector& x) const;
  bool contains(const Cone& other) const;
  bool contains_in_relative_interior(const Vector& x) const;

  /// All faces, including the minimal face (the lineality space, {0} when
  /// pointed) and the cone itself, sorted by dimension.
  std::vector<Cone> faces() const;
  bool has_face(const Cone& face) const;

  /// Rays lying on the facet with the given index.
  std::vector<Vector> rays_on_facet(std::size_t facet) const;

  bool operator==(const Cone& o) const {
    return dim_ == o.dim_ && rays_ == o.rays_ && lineality_ == o.lineality_ &&
           equations_ == o.equations_;
  }
  bool operator!=(const Cone& o) const { return !(*this == o); }
  bool operator<(const Cone& o) const;

  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> rays_;
  std::vector<Vector> lineality_;
  std::vector<Vector> facets_;
  std::vector<Vector> equations_;
};

/// {u : u.x >= 0 for all x in C}.
Cone dual_cone(const Cone& C);

/// M(sigma) = sigma-perp intersected with the dual lattice: the saturated
/// kernel of the generator matrix.
Lattice m_lattice(const Cone& sigma);

Cone intersect_cones(const Cone& a, const Cone& b);

/**
 * Simplicial cones (as lists of extreme rays) triangulating a pointed cone,
 * using only its extreme rays (pulling triangulation from the first ray).
 */
std::vector<std::vector<Vector>> triangulate(const Cone& C);

}  // namespace toricss
