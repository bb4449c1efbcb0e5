#include "toricss/cone.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace toricss {

namespace {

Vector primitive_from_rational(const std::vector<Rational>& x) {
  Integer lcm_den = 1;
  for (const auto& q : x) lcm_den = lcm(lcm_den, q.get_den());
  Vector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational s = x[i] * lcm_den;
    s.canonicalize();
    v[i] = s.get_num();
  }
  return primitive(std::move(v));
}

void sort_unique(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<Vector> with_negatives(const std::vector<Vector>& vs) {
  std::vector<Vector> out = vs;
  for (const auto& v : vs) out.push_back(scale(v, -1));
  return out;
}

}  // namespace

DoubleDescription extreme_rays(std::size_t dim, const std::vector<Vector>& inequalities) {
  for (const auto& a : inequalities)
    if (a.size() != dim) throw std::invalid_argument("extreme_rays: inequality has wrong dimension");
  const IntegerMatrix A = IntegerMatrix::from_rows(inequalities, dim);
  DoubleDescription out;
  out.lineality = kernel_lattice(A).basis().row_list();
  const std::size_t r = dim - out.lineality.size();
  if (r == 0) return out;

  // r independent inequalities span the row space and cut out a simplicial start cone
  std::vector<std::size_t> chosen;
  std::vector<Vector> chosen_rows;
  for (std::size_t k = 0; k < inequalities.size() && chosen.size() < r; ++k) {
    chosen_rows.push_back(inequalities[k]);
    if (rank(IntegerMatrix::from_rows(chosen_rows, dim)) == chosen_rows.size())
      chosen.push_back(k);
    else
      chosen_rows.pop_back();
  }
  const IntegerMatrix B = IntegerMatrix::from_rows(chosen_rows, dim);
  const RationalMatrix Bq = to_rational(B);
  const RationalMatrix Ginv = inverse(Bq * Bq.transpose());
  const RationalMatrix X = Bq.transpose() * Ginv;  // column j solves B x = e_j inside the row space
  std::vector<Vector> rays;
  for (std::size_t j = 0; j < r; ++j) rays.push_back(primitive_from_rational(X.col(j)));

  std::vector<std::size_t> processed = chosen;
  std::vector<bool> used(inequalities.size(), false);
  for (auto k : chosen) used[k] = true;

  for (std::size_t k = 0; k < inequalities.size(); ++k) {
    if (used[k]) continue;
    const Vector& a = inequalities[k];
    std::vector<Vector> plus, zero, minus;
    std::vector<Integer> s_plus, s_minus;
    for (const auto& v : rays) {
      const Integer s = dot(a, v);
      if (s > 0) {
        plus.push_back(v);
        s_plus.push_back(s);
      } else if (s < 0) {
        minus.push_back(v);
        s_minus.push_back(s);
      } else {
        zero.push_back(v);
      }
    }
    if (!minus.empty()) {
      std::vector<Vector> next = plus;
      next.insert(next.end(), zero.begin(), zero.end());
      if (r >= 2) {
        for (std::size_t i = 0; i < plus.size(); ++i)
          for (std::size_t j = 0; j < minus.size(); ++j) {
            std::vector<Vector> common;
            for (auto idx : processed) {
              const Vector& c = inequalities[idx];
              if (dot(c, plus[i]) == 0 && dot(c, minus[j]) == 0) common.push_back(c);
            }
            if (common.size() + 2 < r) continue;
            if (rank(IntegerMatrix::from_rows(common, dim)) != r - 2) continue;
            next.push_back(primitive(scale(minus[j], s_plus[i]) - scale(plus[i], s_minus[j])));
          }
      }
      sort_unique(next);
      rays = std::move(next);
    }
    processed.push_back(k);
    used[k] = true;
  }
  sort_unique(rays);
  out.rays = std::move(rays);
  return out;
}

Cone Cone::from_generators(std::size_t dim, const std::vector<Vector>& generators) {
  std::vector<Vector> gens;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("Cone: generator has wrong dimension");
    if (!toricss::is_zero(g)) gens.push_back(primitive(g));
  }
  sort_unique(gens);
  Cone c;
  c.dim_ = dim;
  const auto dual = extreme_rays(dim, gens);
  c.facets_ = dual.rays;
  c.equations_ = dual.lineality;
  std::vector<Vector> ineqs = c.facets_;
  const auto eqs = with_negatives(c.equations_);
  ineqs.insert(ineqs.end(), eqs.begin(), eqs.end());
  const auto primal = extreme_rays(dim, ineqs);
  c.rays_ = primal.rays;
  c.lineality_ = primal.lineality;
  return c;
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<Vector>& inequalities,
                             const std::vector<Vector>& equations) {
  std::vector<Vector> all = inequalities;
  const auto eqs = with_negatives(equations);
  all.insert(all.end(), eqs.begin(), eqs.end());
  const auto dd = extreme_rays(dim, all);
  std::vector<Vector> gens = dd.rays;
  const auto lin = with_negatives(dd.lineality);
  gens.insert(gens.end(), lin.begin(), lin.end());
  return from_generators(dim, gens);
}

Cone Cone::whole_space(std::size_t dim) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e(dim);
    e[i] = 1;
    gens.push_back(e);
    e[i] = -1;
    gens.push_back(e);
  }
  return from_generators(dim, gens);
}

std::vector<Vector> Cone::generators() const {
  std::vector<Vector> out = rays_;
  const auto lin = with_negatives(lineality_);
  out.insert(out.end(), lin.begin(), lin.end());
  return out;
}

bool Cone::contains(const Vector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("Cone::contains: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.dim_ != dim_) return false;
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const Vector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("Cone::contains: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

std::vector<Vector> Cone::rays_on_facet(std::size_t facet) const {
  std::vector<Vector> out;
  for (const auto& r : rays_)
    if (dot(facets_.at(facet), r) == 0) out.push_back(r);
  return out;
}

std::vector<Cone> Cone::faces() const {
  if (facets_.empty()) return {*this};
  using Mask = std::vector<bool>;
  std::vector<Mask> tight(facets_.size(), Mask(rays_.size(), false));
  for (std::size_t i = 0; i < facets_.size(); ++i)
    for (std::size_t j = 0; j < rays_.size(); ++j) tight[i][j] = dot(facets_[i], rays_[j]) == 0;

  std::vector<Mask> found{Mask(rays_.size(), true)};
  std::map<Mask, bool> seen{{found.front(), true}};
  for (std::size_t k = 0; k < found.size(); ++k)
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      Mask m = found[k];
      for (std::size_t j = 0; j < m.size(); ++j) m[j] = m[j] && tight[i][j];
      if (seen.emplace(m, true).second) found.push_back(m);
    }

  const auto lin = with_negatives(lineality_);
  std::vector<Cone> out;
  for (const auto& m : found) {
    std::vector<Vector> gens = lin;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j]) gens.push_back(rays_[j]);
    out.push_back(from_generators(dim_, gens));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a < b;
  });
  return out;
}

bool Cone::has_face(const Cone& face) const {
  if (!contains(face)) return false;
  const auto gens = face.generators();
  std::vector<Vector> face_gens = with_negatives(lineality_);
  for (const auto& r : rays_) {
    bool on_all = true;
    for (const auto& f : facets_) {
      bool vanishes_on_face = true;
      for (const auto& g : gens)
        if (dot(f, g) != 0) {
          vanishes_on_face = false;
          break;
        }
      if (vanishes_on_face && dot(f, r) != 0) {
        on_all = false;
        break;
      }
    }
    if (on_all) face_gens.push_back(r);
  }
  return from_generators(dim_, face_gens) == face;
}

bool Cone::operator<(const Cone& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  if (rays_ != o.rays_) return rays_ < o.rays_;
  if (lineality_ != o.lineality_) return lineality_ < o.lineality_;
  return equations_ < o.equations_;
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "cone(";
  bool first = true;
  for (const auto& r : rays_) {
    os << (first ? "" : ",") << toricss::to_string(r);
    first = false;
  }
  for (const auto& l : lineality_) {
    os << (first ? "" : ",") << "+-" << toricss::to_string(l);
    first = false;
  }
  os << ')';
  return os.str();
}

Cone dual_cone(const Cone& C) { return Cone::from_inequalities(C.ambient_dim(), C.generators()); }

Lattice m_lattice(const Cone& sigma) {
  return kernel_lattice(IntegerMatrix::from_rows(sigma.generators(), sigma.ambient_dim()));
}

Cone intersect_cones(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect_cones: ambient dimensions differ");
  std::vector<Vector> ineqs = a.facet_normals();
  ineqs.insert(ineqs.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<Vector> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_dim(), ineqs, eqs);
}

std::vector<std::vector<Vector>> triangulate(const Cone& C) {
  if (!C.is_pointed()) throw std::invalid_argument("triangulate: cone is not pointed");
  const auto& rays = C.rays();
  if (rays.size() == C.dimension()) return {rays};
  const Vector& apex = rays.front();
  std::vector<std::vector<Vector>> out;
  for (std::size_t i = 0; i < C.facet_normals().size(); ++i) {
    if (dot(C.facet_normals()[i], apex) == 0) continue;
    const Cone facet = Cone::from_generators(C.ambient_dim(), C.rays_on_facet(i));
    for (auto simplex : triangulate(facet)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace toricss
