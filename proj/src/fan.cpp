#include "toricss/fan.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "toricss/errors.hpp"
#include "toricss/rational_lp.hpp"

namespace toricss {

namespace {

Vector unit(std::size_t dim, std::size_t i, long value = 1) {
  Vector e(dim);
  e[i] = value;
  return e;
}

std::string cone_key(const Cone& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.rays().size(); ++i) os << (i ? "," : "") << to_string(c.rays()[i]);
  os << ']';
  return os.str();
}

}  // namespace

Fan Fan::from_max_cones(std::size_t dim, std::vector<Cone> max_cones, std::string provenance) {
  if (max_cones.empty()) throw InvalidFanError("fan: no cones given");
  for (const auto& c : max_cones) {
    if (c.ambient_dim() != dim) throw InvalidFanError("fan: cone " + c.to_string() + " has wrong ambient dimension");
    if (!c.is_pointed()) throw InvalidFanError("fan: cone " + c.to_string() + " is not strongly convex");
  }
  for (std::size_t i = 0; i < max_cones.size(); ++i)
    for (std::size_t j = 0; j < max_cones.size(); ++j) {
      if (i == j) continue;
      if (max_cones[i].contains(max_cones[j]))
        throw InvalidFanError("fan: cone " + max_cones[j].to_string() + " is contained in " +
                              max_cones[i].to_string() + "; list maximal cones only");
      if (i < j) {
        const Cone w = intersect_cones(max_cones[i], max_cones[j]);
        if (!max_cones[i].has_face(w) || !max_cones[j].has_face(w))
          throw InvalidFanError("fan: cones " + max_cones[i].to_string() + " and " + max_cones[j].to_string() +
                                " do not meet in a common face");
      }
    }
  Fan F;
  F.dim_ = dim;
  F.provenance_ = std::move(provenance);
  for (const auto& c : max_cones) {
    auto fs = c.faces();
    F.cones_.insert(F.cones_.end(), fs.begin(), fs.end());
  }
  std::sort(F.cones_.begin(), F.cones_.end(), [](const Cone& a, const Cone& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a < b;
  });
  F.cones_.erase(std::unique(F.cones_.begin(), F.cones_.end()), F.cones_.end());
  F.max_cones_ = std::move(max_cones);
  return F;
}

std::vector<Cone> Fan::cones_of_dimension(std::size_t k) const {
  std::vector<Cone> out;
  for (const auto& c : cones_)
    if (c.dimension() == k) out.push_back(c);
  return out;
}

std::size_t Fan::count_of_dimension(std::size_t k) const {
  return static_cast<std::size_t>(
      std::count_if(cones_.begin(), cones_.end(), [k](const Cone& c) { return c.dimension() == k; }));
}

bool Fan::contains_cone(const Cone& c) const {
  return std::find(cones_.begin(), cones_.end(), c) != cones_.end();
}

std::string Fan::canonical_form() const {
  std::vector<std::string> keys;
  for (const auto& c : max_cones_) keys.push_back(cone_key(c));
  std::sort(keys.begin(), keys.end());
  std::ostringstream os;
  os << "dim=" << dim_ << ";";
  for (const auto& k : keys) os << k << ';';
  return os.str();
}

std::string Fan::canonical_hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : canonical_form()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

LatticePolytope LatticePolytope::from_points(std::size_t dim, const std::vector<Vector>& points) {
  if (dim == 0) throw HypothesisError("full-dimensional", "polytope: ambient dimension must be positive");
  if (points.empty()) throw HypothesisError("full-dimensional", "polytope: no points given");
  std::vector<Vector> lifted;
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("polytope: point has wrong dimension");
    Vector q = p;
    q.push_back(1);
    lifted.push_back(std::move(q));
  }
  const Cone hom = Cone::from_generators(dim + 1, lifted);
  if (!hom.is_full_dimensional())
    throw HypothesisError("full-dimensional", "polytope: convex hull is not full dimensional");
  LatticePolytope P;
  P.dim_ = dim;
  for (const auto& r : hom.rays()) {
    if (r.back() != 1) throw std::logic_error("polytope: vertex ray not at height one");
    P.vertices_.emplace_back(r.begin(), r.end() - 1);
  }
  std::sort(P.vertices_.begin(), P.vertices_.end());
  for (const auto& f : hom.facet_normals()) P.facets_.emplace_back(Vector(f.begin(), f.end() - 1), f.back());
  return P;
}

bool LatticePolytope::contains(const Vector& x, const Integer& dilation) const {
  for (const auto& [a, b] : facets_)
    if (dot(a, x) + dilation * b < 0) return false;
  return true;
}

bool LatticePolytope::contains_in_interior(const Vector& x, const Integer& dilation) const {
  for (const auto& [a, b] : facets_)
    if (dot(a, x) + dilation * b <= 0) return false;
  return true;
}

std::vector<Vector> LatticePolytope::interior_points_of_dilation(const Integer& k) const {
  Vector lo = scale(vertices_.front(), k), hi = lo;
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min<Integer>(lo[i], k * v[i]);
      hi[i] = std::max<Integer>(hi[i], k * v[i]);
    }
  std::vector<Vector> out;
  Vector x = lo;
  while (true) {
    if (contains_in_interior(x, k)) out.push_back(x);
    std::size_t i = 0;
    while (i < dim_ && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == dim_) break;
    ++x[i];
  }
  return out;
}

bool is_complete(const Fan& F) {
  const std::size_t d = F.dim();
  for (const auto& sigma : F.max_cones())
    if (sigma.dimension() != d) return false;
  if (d == 0) return true;
  for (const auto& sigma : F.max_cones())
    for (std::size_t i = 0; i < sigma.facet_normals().size(); ++i) {
      const Cone wall = Cone::from_generators(d, sigma.rays_on_facet(i));
      const auto sharing = std::count_if(F.max_cones().begin(), F.max_cones().end(),
                                         [&](const Cone& tau) { return tau.contains(wall); });
      if (sharing != 2) return false;
    }
  return true;
}

bool is_simplicial(const Fan& F) {
  return std::all_of(F.max_cones().begin(), F.max_cones().end(), [](const Cone& c) { return c.is_simplicial(); });
}

bool is_smooth(const Fan& F) {
  if (!is_simplicial(F)) return false;
  for (const auto& c : F.max_cones()) {
    const auto factors = invariant_factors(IntegerMatrix::from_rows(c.rays(), F.dim()));
    if (factors.size() != c.rays().size()) return false;
    for (const auto& f : factors)
      if (f != 1) return false;
  }
  return true;
}

bool is_projective(const Fan& F) {
  if (!is_complete(F))
    throw HypothesisError("complete", "is_projective: fan is not complete; supply a complete projective superfan "
                                      "and certify quasi-projectivity instead");
  const std::size_t d = F.dim();
  const std::size_t n = F.max_cones().size();
  if (d == 0) return true;
  // unknowns: a linear functional u_i per maximal cone, then the slack t
  LinearProgram lp(n * d + 1);
  for (std::size_t v = 0; v < n * d; ++v) lp.set_free(v);
  const std::size_t t = n * d;
  auto difference_row = [&](std::size_t i, std::size_t j, const Vector& r) {
    std::vector<Rational> row(n * d + 1);
    for (std::size_t k = 0; k < d; ++k) {
      row[i * d + k] += Rational(r[k]);
      row[j * d + k] -= Rational(r[k]);
    }
    return row;
  };
  const auto& cones = F.max_cones();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Cone w = intersect_cones(cones[i], cones[j]);
      for (const auto& r : w.rays()) lp.add_constraint(difference_row(i, j, r), Relation::Equal, 0);
      if (w.dimension() + 1 != d) continue;
      for (const auto& r : cones[j].rays()) {
        if (w.contains(r)) continue;
        auto row = difference_row(j, i, r);
        row[t] = -1;
        lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
      }
      for (const auto& r : cones[i].rays()) {
        if (w.contains(r)) continue;
        auto row = difference_row(i, j, r);
        row[t] = -1;
        lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
      }
    }
  std::vector<Rational> cap(n * d + 1);
  cap[t] = 1;
  lp.add_constraint(cap, Relation::LessEqual, 1);
  lp.set_objective(cap);
  const auto sol = lp.maximize();
  return sol.status == LpStatus::Optimal && sol.objective > 0;
}

Fan normal_fan(const LatticePolytope& P) {
  std::vector<Cone> cones;
  for (const auto& v : P.vertices()) {
    std::vector<Vector> corner;
    for (const auto& w : P.vertices())
      if (w != v) corner.push_back(w - v);
    cones.push_back(dual_cone(Cone::from_generators(P.dim(), corner)));
  }
  std::ostringstream prov;
  prov << "normal fan of polytope conv(";
  for (std::size_t i = 0; i < P.vertices().size(); ++i) prov << (i ? "," : "") << to_string(P.vertices()[i]);
  prov << ')';
  Fan F = Fan::from_max_cones(P.dim(), std::move(cones), prov.str());
  F.polytope_witness_ = true;
  return F;
}

bool is_subfan(const Fan& sub, const Fan& super) {
  if (sub.dim() != super.dim()) return false;
  return std::all_of(sub.cones().begin(), sub.cones().end(), [&](const Cone& c) { return super.contains_cone(c); });
}

QuasiProjectiveCertificate certify_quasi_projective(const Fan& F, const std::optional<Fan>& superfan) {
  if (is_complete(F)) {
    if (F.has_polytope_witness()) return {true, "fan is a normal fan"};
    if (is_projective(F)) return {true, "fan is complete and projective"};
    return {false, ""};
  }
  if (superfan && is_complete(*superfan) && is_projective(*superfan) && is_subfan(F, *superfan))
    return {true, "subfan of supplied projective fan " + superfan->provenance()};
  if (F.dim() > 0) {
    const Fan pd = normal_fan(standard_simplex(F.dim()));
    if (is_subfan(F, pd)) return {true, "subfan of the normal fan of the standard simplex"};
  }
  return {false, ""};
}

LatticePolytope standard_simplex(std::size_t d) {
  std::vector<Vector> pts{Vector(d)};
  for (std::size_t i = 0; i < d; ++i) pts.push_back(unit(d, i));
  return LatticePolytope::from_points(d, pts);
}

LatticePolytope unit_cube(std::size_t d) {
  std::vector<Vector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    Vector p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i) & 1U;
    pts.push_back(p);
  }
  return LatticePolytope::from_points(d, pts);
}

namespace catalog {

namespace {

Fan from_ray_subsets(std::size_t dim, const std::vector<Vector>& rays, std::size_t k, std::string provenance) {
  std::vector<Cone> cones;
  for (const auto& s : subsets(rays.size(), k)) {
    std::vector<Vector> gens;
    for (auto i : s) gens.push_back(rays[i]);
    cones.push_back(Cone::from_generators(dim, gens));
  }
  return Fan::from_max_cones(dim, std::move(cones), std::move(provenance));
}

}  // namespace

Fan projective_space(std::size_t d) {
  if (d == 0) throw std::invalid_argument("projective_space: dimension must be positive");
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < d; ++i) rays.push_back(unit(d, i));
  rays.push_back(Vector(d, -1));
  return from_ray_subsets(d, rays, d, "projective_space(" + std::to_string(d) + ")");
}

Fan hirzebruch(long a) {
  const std::vector<Vector> rays{{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < 4; ++i) cones.push_back(Cone::from_generators(2, {rays[i], rays[(i + 1) % 4]}));
  return Fan::from_max_cones(2, std::move(cones), "hirzebruch(" + std::to_string(a) + ")");
}

Fan weighted_projective(const std::vector<long>& weights) {
  if (weights.size() < 2) throw std::invalid_argument("weighted_projective: need at least two weights");
  long g = 0;
  for (long w : weights) {
    if (w <= 0) throw std::invalid_argument("weighted_projective: weights must be positive");
    g = std::gcd(g, w);
  }
  if (g != 1) throw std::invalid_argument("weighted_projective: weights must be coprime");
  const std::size_t d = weights.size() - 1;
  std::vector<Vector> rays(weights.size(), Vector(d));
  const auto one = std::find(weights.begin(), weights.end(), 1L);
  if (one != weights.end()) {
    // u_k = -sum w_i e_i over the other indices, which become the unit vectors
    const auto k = static_cast<std::size_t>(one - weights.begin());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (i == k) continue;
      rays[i] = unit(d, pos);
      rays[k][pos] = -weights[i];
      ++pos;
    }
  } else {
    // rays are the images of the standard basis in Z^{d+1} / Z.w
    IntegerMatrix w(weights.size(), 1);
    for (std::size_t i = 0; i < weights.size(); ++i) w(i, 0) = weights[i];
    const auto U = hermite_normal_form(w).U;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      for (std::size_t k = 0; k < d; ++k) rays[i][k] = U(k + 1, i);
      rays[i] = primitive(rays[i]);
    }
  }
  std::ostringstream prov;
  prov << "weighted_projective(";
  for (std::size_t i = 0; i < weights.size(); ++i) prov << (i ? "," : "") << weights[i];
  prov << ')';
  return from_ray_subsets(d, rays, d, prov.str());
}

Fan product(const Fan& a, const Fan& b) {
  const std::size_t d = a.dim() + b.dim();
  std::vector<Cone> cones;
  for (const auto& s : a.max_cones())
    for (const auto& t : b.max_cones()) {
      std::vector<Vector> gens;
      for (const auto& g : s.rays()) {
        Vector v = g;
        v.resize(d);
        gens.push_back(v);
      }
      for (const auto& h : t.rays()) {
        Vector v(a.dim());
        v.insert(v.end(), h.begin(), h.end());
        gens.push_back(v);
      }
      cones.push_back(Cone::from_generators(d, gens));
    }
  return Fan::from_max_cones(d, std::move(cones), "product(" + a.provenance() + "," + b.provenance() + ")");
}

Fan affine_orthant(std::size_t d) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(unit(d, i));
  return Fan::from_max_cones(d, {Cone::from_generators(d, gens)}, "affine_orthant(" + std::to_string(d) + ")");
}

Fan torus(std::size_t d) { return Fan::from_max_cones(d, {Cone::zero(d)}, "torus(" + std::to_string(d) + ")"); }

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& s) : s_(s) {}

  Fan parse() {
    Fan f = fan();
    skip_space();
    if (pos_ != s_.size()) fail("trailing characters");
    return f;
  }

 private:
  Fan fan() {
    const std::string name = identifier();
    expect('(');
    if (name == "product") {
      Fan a = fan();
      expect(',');
      Fan b = fan();
      expect(')');
      return product(a, b);
    }
    std::vector<long> args;
    skip_space();
    if (peek() != ')') {
      args.push_back(number());
      while (skip_space(), peek() == ',') {
        ++pos_;
        args.push_back(number());
      }
    }
    expect(')');
    auto one_arg = [&]() {
      if (args.size() != 1) fail(name + " takes one argument");
      return args[0];
    };
    auto dimension_arg = [&]() {
      const long d = one_arg();
      if (d < 0) fail(name + ": dimension must be nonnegative");
      return static_cast<std::size_t>(d);
    };
    if (name == "projective_space") return projective_space(dimension_arg());
    if (name == "hirzebruch") return hirzebruch(one_arg());
    if (name == "weighted_projective") return weighted_projective(args);
    if (name == "affine_orthant") return affine_orthant(dimension_arg());
    if (name == "torus") return torus(dimension_arg());
    fail("unknown catalog name '" + name + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a catalog name");
    return s_.substr(start, pos_ - start);
  }

  long number() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ - start == 1 && s_[start] == '-')) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("catalog expression '" + s_ + "': " + what);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Fan from_expression(const std::string& expr) { return ExpressionParser(expr).parse(); }

}  // namespace catalog

}  // namespace toricss
