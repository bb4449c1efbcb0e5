#include "toricss/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "toricss/errors.hpp"
#include "toricss/rational_lp.hpp"

namespace toricss {

namespace {

Vector row_times(const Vector& x, const IntegerMatrix& A) {
  Vector out(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (x[i] != 0)
      for (std::size_t j = 0; j < A.cols(); ++j) out[j] += x[i] * A(i, j);
  return out;
}

Vector primitive_of(const std::vector<Rational>& q) {
  Integer den = 1;
  for (const auto& r : q) den = lcm(den, r.get_den());
  Vector v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rational s = q[i] * den;
    s.canonicalize();
    v[i] = s.get_num();
  }
  return primitive(std::move(v));
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Integer coordinates on a lattice whose basis rows are independent.
class Chart {
 public:
  explicit Chart(const Lattice& L) : lattice_(L) {
    const RationalMatrix B = to_rational(L.basis());
    solve_ = L.rank() == 0 ? RationalMatrix(L.ambient_rank(), 0) : B.transpose() * inverse(B * B.transpose());
  }

  std::size_t dim() const { return lattice_.rank(); }

  std::vector<Rational> rational_coords(const Vector& x) const {
    std::vector<Rational> z(dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) z[j] += Rational(x[i]) * solve_(i, j);
    return z;
  }

  Vector coords(const Vector& x) const {
    auto c = lattice_.coordinates(x);
    if (!c) throw std::logic_error("Chart: point outside the lattice");
    return *c;
  }

  Vector point(const Vector& z) const { return row_times(z, lattice_.basis()); }

 private:
  Lattice lattice_;
  RationalMatrix solve_;
};

struct ParallelepipedPoint {
  Vector point;
  std::vector<Rational> coeffs;
};

// Lattice points sum(l_i v_i), 0 <= l_i < 1, for a basis v of Q^k.
std::vector<ParallelepipedPoint> half_open_parallelepiped(const std::vector<Vector>& v) {
  const std::size_t k = v.size();
  const IntegerMatrix R = IntegerMatrix::from_rows(v, k);
  const auto snf = smith_normal_form(R);  // U R V = D, so Z^k / rows(R) ~ Z^k / rows(D) via x -> x V
  const IntegerMatrix Vinv = to_integer(inverse(to_rational(snf.V)));
  const RationalMatrix Rinv = inverse(to_rational(R));

  std::vector<ParallelepipedPoint> out;
  Vector w(k);
  while (true) {
    Vector x = row_times(w, Vinv);
    std::vector<Rational> lambda(k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i)
        if (x[i] != 0) lambda[j] += Rational(x[i]) * Rinv(i, j);
    for (std::size_t j = 0; j < k; ++j) {
      const Integer f = floor_of(lambda[j]);
      if (f != 0) {
        x = x - scale(v[j], f);
        lambda[j] -= f;
      }
    }
    out.push_back({std::move(x), std::move(lambda)});

    std::size_t i = 0;
    while (i < k && w[i] + 1 == snf.D(i, i)) {
      w[i] = 0;
      ++i;
    }
    if (i == k) break;
    ++w[i];
  }
  return out;
}

// Lattice spanned by L inside the linear span of C.
Lattice restrict_to_span(const Cone& C, const Lattice& L) {
  if (C.equations().empty()) return L;
  const IntegerMatrix E = IntegerMatrix::from_rows(C.equations(), C.ambient_dim());
  const Lattice K = kernel_lattice(E * L.basis().transpose());
  return Lattice::generated_by(L.ambient_rank(), (K.basis() * L.basis()).row_list());
}

bool less_by_degree(const Grading& g, const Vector& a, const Vector& b) {
  const Integer da = g.degree(a), db = g.degree(b);
  if (da != db) return da < db;
  return a < b;
}

void sort_unique(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<Cone> nonzero_faces(const Cone& C) {
  std::vector<Cone> out;
  for (auto& F : C.faces())
    if (!F.is_zero()) out.push_back(std::move(F));
  return out;
}

// The minimal-degree generator of M on each ray of a face (ties lexicographic).
std::map<Vector, Vector> ray_elements(const AffineMonoid& M, const Cone& face) {
  const Grading& g = M.grading();
  std::map<Vector, Vector> out;
  for (const auto& gen : M.generators_on(face)) {
    const Vector r = primitive(gen);
    bool is_ray = false;
    for (const auto& ray : face.rays())
      if (ray == r) is_ray = true;
    if (!is_ray) continue;
    auto it = out.find(r);
    if (it == out.end() || less_by_degree(g, gen, it->second)) out[r] = gen;
  }
  return out;
}

}  // namespace

Integer Grading::degree(const Vector& x) const {
  const auto c = group.coordinates(x);
  if (!c) throw std::invalid_argument("Grading::degree: point is not in the group of the monoid");
  return dot(values, *c);
}

AffineMonoid::AffineMonoid(std::size_t rank, std::vector<Vector> generators) : rank_(rank) {
  for (auto& g : generators) {
    if (g.size() != rank) throw std::invalid_argument("AffineMonoid: generator has wrong rank");
    if (!toricss::is_zero(g)) generators_.push_back(std::move(g));
  }
  sort_unique(generators_);
  cone_ = Cone::from_generators(rank, generators_);
  group_ = Lattice::generated_by(rank, generators_);
  if (!is_positive()) return;

  // suffix cones order generators by decreasing degree so the search removes big steps first
  const Chart chart(group_);
  std::vector<Vector> y;
  for (const auto& g : generators_) y.push_back(chart.coords(g));
  const std::size_t k = group_.rank();
  Grading grading{group_, Vector(k)};
  if (k > 0) {
    Vector total(k);
    for (const auto& v : y) total = total + v;

    auto feasible_lp = [&]() {
      LinearProgram lp(k);
      for (std::size_t i = 0; i < k; ++i) lp.set_free(i);
      for (const auto& v : y) lp.add_constraint(std::vector<Rational>(v.begin(), v.end()), Relation::GreaterEqual, 1);
      return lp;
    };
    LinearProgram lp = feasible_lp();
    std::vector<Rational> obj;
    for (const auto& t : total) obj.emplace_back(-t);
    lp.set_objective(obj);
    const LpSolution opt = lp.maximize();
    if (opt.status != LpStatus::Optimal) throw std::logic_error("AffineMonoid: grading LP failed on a pointed cone");
    Integer den = 1;
    for (const auto& q : opt.values) den = lcm(den, q.get_den());
    Vector fallback(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational s = opt.values[i] * den;
      s.canonicalize();
      fallback[i] = s.get_num();
    }
    const Integer budget = dot(total, fallback);

    // integer optimum inside the bounded region {y.mu >= 1, total.mu <= budget}
    std::vector<Integer> lo(k), hi(k);
    Integer box = 1;
    for (std::size_t i = 0; i < k; ++i) {
      for (int sign : {1, -1}) {
        LinearProgram b = feasible_lp();
        b.add_constraint(std::vector<Rational>(total.begin(), total.end()), Relation::LessEqual, Rational(budget));
        std::vector<Rational> c(k);
        c[i] = sign;
        b.set_objective(c);
        const auto s = b.maximize();
        if (sign == 1)
          hi[i] = floor_of(s.objective);
        else
          lo[i] = -floor_of(s.objective);
      }
      box *= hi[i] - lo[i] + 1;
    }
    Vector best = fallback;
    if (box <= 2000000) {
      Vector mu = lo;
      Integer best_value = budget;
      while (true) {
        bool ok = true;
        for (const auto& v : y)
          if (dot(v, mu) < 1) {
            ok = false;
            break;
          }
        if (ok) {
          const Integer val = dot(total, mu);
          if (val < best_value || (val == best_value && mu < best)) {
            best_value = val;
            best = mu;
          }
        }
        std::size_t i = k;
        while (i > 0 && mu[i - 1] == hi[i - 1]) {
          mu[i - 1] = lo[i - 1];
          --i;
        }
        if (i == 0) break;
        ++mu[i - 1];
      }
    }
    grading.values = best;
  }
  grading_ = grading;

  std::stable_sort(generators_.begin(), generators_.end(), [&](const Vector& a, const Vector& b) {
    return grading.degree(a) > grading.degree(b);
  });
  for (std::size_t i = 0; i < generators_.size(); ++i)
    suffix_cones_.push_back(
        Cone::from_generators(rank, std::vector<Vector>(generators_.begin() + i, generators_.end())));
  // suffix_cones_ is tied to this order; the public generator list stays sorted
  search_order_ = generators_;
  sort_unique(generators_);
}

const Grading& AffineMonoid::grading() const {
  if (!grading_) throw HypothesisError("positive", "the monoid is not positive, so it admits no grading");
  return *grading_;
}

bool AffineMonoid::contains(const Vector& x) const {
  if (x.size() != rank_) throw std::invalid_argument("AffineMonoid::contains: rank mismatch");
  if (toricss::is_zero(x)) return true;
  if (!group_.contains(x)) return false;
  if (is_group()) return true;
  if (!is_positive())
    throw HypothesisError("positive", "membership is decided only for positive monoids and groups");
  if (!cone_.contains(x)) return false;

  std::map<std::pair<Vector, std::size_t>, bool> memo;
  auto search = [&](auto&& self, const Vector& y, std::size_t i) -> bool {
    if (toricss::is_zero(y)) return true;
    if (i == search_order_.size()) return false;
    if (!suffix_cones_[i].contains(y)) return false;
    const auto key = std::make_pair(y, i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool found = false;
    Vector z = y;
    while (!found && suffix_cones_[i].contains(z)) {
      found = self(self, z, i + 1);
      z = z - search_order_[i];
    }
    memo[key] = found;
    return found;
  };
  return search(search, x, 0);
}

std::vector<Vector> AffineMonoid::generators_on(const Cone& face) const {
  std::vector<Vector> out;
  for (const auto& g : generators_)
    if (face.contains(g)) out.push_back(g);
  return out;
}

Lattice group_of_differences(const AffineMonoid& M) { return M.group(); }

Lattice units(const AffineMonoid& M) {
  // a generator is a unit iff its negative lies in the cone (it then sits in
  // the lineality face, whose monoid is a group)
  std::vector<Vector> in_lineality;
  for (const auto& g : M.generators())
    if (M.cone().contains(scale(g, -1))) in_lineality.push_back(g);
  return Lattice::generated_by(M.rank(), in_lineality);
}

bool is_positive(const AffineMonoid& M) { return M.is_positive(); }

std::vector<Vector> hilbert_basis(const Cone& C, const Lattice& L) {
  if (!C.is_pointed()) throw HypothesisError("pointed", "Hilbert bases are computed for pointed cones only");
  if (C.is_zero()) return {};
  const Lattice span_lattice = restrict_to_span(C, L);
  if (span_lattice.rank() != C.dimension())
    throw std::invalid_argument("hilbert_basis: the lattice does not span the cone");
  const Chart chart(span_lattice);
  const std::size_t k = chart.dim();
  std::vector<Vector> rays;
  for (const auto& r : C.rays()) rays.push_back(primitive_of(chart.rational_coords(r)));
  const Cone Ck = Cone::from_generators(k, rays);

  std::vector<Vector> candidates = Ck.rays();
  for (const auto& simplex : triangulate(Ck))
    for (auto& p : half_open_parallelepiped(simplex))
      if (!is_zero(p.point)) candidates.push_back(std::move(p.point));
  sort_unique(candidates);

  std::vector<Vector> out;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& h : candidates)
      if (h != x && Ck.contains(x - h)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(chart.point(x));
  }
  sort_unique(out);
  return out;
}

AffineMonoid normalization(const AffineMonoid& M) {
  if (M.is_group()) return M;
  if (!M.is_positive()) throw HypothesisError("positive", "normalization is computed for positive monoids and groups");
  return AffineMonoid(M.rank(), hilbert_basis(M.cone(), M.group()));
}

bool in_normalization(const AffineMonoid& M, const Vector& x) { return M.group().contains(x) && M.cone().contains(x); }

bool in_seminormalization(const AffineMonoid& M, const Vector& x) {
  if (is_zero(x)) return true;
  if (!M.cone().contains(x)) return false;
  // carrier face: the generators on every facet through x
  std::vector<Vector> on_face;
  for (const auto& g : M.generators()) {
    bool on = true;
    for (const auto& f : M.cone().facet_normals())
      if (dot(f, x) == 0 && dot(f, g) != 0) {
        on = false;
        break;
      }
    if (on) on_face.push_back(g);
  }
  return Lattice::generated_by(M.rank(), on_face).contains(x);
}

AffineMonoid seminormalization(const AffineMonoid& M) {
  if (M.is_group()) return M;
  if (!M.is_positive())
    throw HypothesisError("positive", "seminormalization is computed for positive monoids and groups");
  std::vector<Vector> candidates;
  for (const auto& F : nonzero_faces(M.cone())) {
    const Lattice LF = Lattice::generated_by(M.rank(), M.generators_on(F));
    const Chart chart(LF);
    const std::size_t k = chart.dim();
    std::vector<Vector> s;
    for (const auto& r : F.rays()) s.push_back(primitive_of(chart.rational_coords(r)));
    const Cone Fk = Cone::from_generators(k, s);
    for (const auto& simplex : triangulate(Fk))
      for (const auto& p : half_open_parallelepiped(simplex)) {
        std::vector<std::size_t> zeros;
        for (std::size_t i = 0; i < k; ++i)
          if (p.coeffs[i] == 0) zeros.push_back(i);
        // closed parallelepiped: raise any subset of the zero coefficients to one
        for (std::size_t mask = 0; mask < (std::size_t{1} << zeros.size()); ++mask) {
          Vector q = p.point;
          for (std::size_t b = 0; b < zeros.size(); ++b)
            if (mask >> b & 1) q = q + simplex[zeros[b]];
          if (Fk.contains_in_relative_interior(q)) candidates.push_back(chart.point(q));
        }
      }
  }
  sort_unique(candidates);
  std::vector<Vector> out;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& h : candidates)
      if (h != x && in_seminormalization(M, x - h)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(x);
  }
  return AffineMonoid(M.rank(), out);
}

bool is_normal(const AffineMonoid& M) {
  const AffineMonoid N = normalization(M);
  for (const auto& h : N.generators())
    if (!M.contains(h)) return false;
  return true;
}

bool is_seminormal(const AffineMonoid& M) {
  const AffineMonoid S = seminormalization(M);
  for (const auto& h : S.generators())
    if (!M.contains(h)) return false;
  return true;
}

std::vector<Vector> elements_up_to_degree(const std::vector<Vector>& gens, const Grading& grading,
                                          const Integer& bound) {
  std::set<Vector> seen;
  std::deque<Vector> queue;
  const Vector zero(grading.group.ambient_rank());
  if (bound < 0) return {};
  seen.insert(zero);
  queue.push_back(zero);
  std::vector<Integer> deg;
  for (const auto& g : gens) deg.push_back(grading.degree(g));
  while (!queue.empty()) {
    const Vector x = queue.front();
    queue.pop_front();
    const Integer dx = grading.degree(x);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (dx + deg[i] > bound) continue;
      Vector y = x + gens[i];
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Vector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Vector& a, const Vector& b) { return less_by_degree(grading, a, b); });
  return out;
}

namespace {

// Least c >= 2 with c' x in M for every c' >= c, looked for up to `limit`.
std::optional<Integer> stable_multiple(const AffineMonoid& M, const Vector& x, unsigned limit) {
  std::vector<bool> in(2 * limit + 1, false);
  for (unsigned c = 1; c <= 2 * limit; ++c) in[c] = M.contains(scale(x, c));
  for (unsigned c = 1; c <= limit; ++c) {
    bool all = true;
    for (unsigned d = c; d <= 2 * c - 1 && all; ++d) all = in[d];
    if (all) return Integer(c);
  }
  return std::nullopt;
}

}  // namespace

SeminormalityCrossCheck cross_check_seminormality(const AffineMonoid& M, const Integer& bound) {
  SeminormalityCrossCheck out;
  const AffineMonoid N = normalization(M);
  for (const auto& x : elements_up_to_degree(N.generators(), M.grading(), bound)) {
    if (M.contains(x)) continue;
    if (M.contains(scale(x, 2)) && M.contains(scale(x, 3))) {
      out.witness = x;
      break;
    }
  }
  const bool sn = is_seminormal(M);
  if (out.witness && sn) out.consistent = false;
  if (!sn && !out.witness) {
    // build a definitional witness from a generator of sn(M) outside M
    const AffineMonoid S = seminormalization(M);
    for (const auto& y : S.generators()) {
      if (M.contains(y)) continue;
      const auto c = stable_multiple(M, y, 64);
      if (!c) continue;
      const Vector z = scale(y, *c - 1);
      if (!M.contains(z) && M.contains(scale(z, 2)) && M.contains(scale(z, 3))) out.witness = z;
      break;
    }
    if (!out.witness) out.consistent = false;
  }
  return out;
}

Integer parallelepiped_degree(const AffineMonoid& M) {
  const Grading& g = M.grading();
  Integer best = 0;
  for (const auto& F : nonzero_faces(M.cone())) {
    const auto t = ray_elements(M, F);
    for (const auto& simplex : triangulate(F)) {
      Integer d = 0;
      for (const auto& r : simplex) d += g.degree(t.at(r));
      best = std::max(best, d);
    }
  }
  return best;
}

GapModule gap(const AffineMonoid& M, const Integer& bound) {
  const Grading& g = M.grading();
  GapModule out;
  out.bound = bound;
  for (const auto& x : elements_up_to_degree(seminormalization(M).generators(), g, bound))
    if (!M.contains(x)) out.elements.push_back(x);
  out.parallelepiped_degree = parallelepiped_degree(M);
  out.window = 0;
  for (const auto& [ray, t] : ray_elements(M, M.cone())) out.window = std::max(out.window, g.degree(t));
  bool top_window_empty = true;
  for (const auto& x : out.elements)
    if (g.degree(x) > bound - out.window) top_window_empty = false;
  out.truncated = !(out.parallelepiped_degree <= bound && top_window_empty);
  return out;
}

ConductorCertificate conductor_element(const AffineMonoid& M, const Cone& face, const Integer& search_degree,
                                       const GapModule* gap_module) {
  if (face.is_zero() || !M.cone().has_face(face))
    throw std::invalid_argument("conductor_element: not a nonzero face of the monoid's cone");
  const Grading& g = M.grading();
  ConductorCertificate out;
  out.face = face;
  out.search_degree = search_degree;

  const auto gens = M.generators_on(face);
  const Lattice LF = Lattice::generated_by(M.rank(), gens);
  const Chart chart(LF);
  const auto t = ray_elements(M, face);
  std::vector<Vector> rays_k;
  std::map<Vector, Vector> t_k;  // chart ray -> chart coordinates of its element of M
  for (const auto& r : face.rays()) {
    const Vector rk = primitive_of(chart.rational_coords(r));
    rays_k.push_back(rk);
    t_k[rk] = chart.coords(t.at(r));
  }
  const Cone Fk = Cone::from_generators(chart.dim(), rays_k);
  for (const auto& simplex : triangulate(Fk)) {
    std::vector<Vector> ts;
    for (const auto& r : simplex) ts.push_back(t_k.at(r));
    for (const auto& p : half_open_parallelepiped(ts)) out.module_generators.push_back(chart.point(p.point));
  }
  sort_unique(out.module_generators);

  for (const auto& m : elements_up_to_degree(gens, g, search_degree)) {
    if (!face.contains_in_relative_interior(m)) continue;
    bool ok = true;
    for (const auto& p : out.module_generators)
      if (!M.contains(m + p)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    out.found = true;
    out.element = m;
    out.degree = g.degree(m);
    break;
  }
  if (out.found && gap_module)
    for (const auto& x : gap_module->elements)
      if (face.contains(x - out.element)) out.avoids_gap = false;
  return out;
}

FrobeniusOnGap frobenius_on_gap(const AffineMonoid& M, const Integer& c, const GapModule& G) {
  if (c < 1) throw std::invalid_argument("frobenius_on_gap: c must be positive");
  FrobeniusOnGap out;
  out.c = c;
  for (const auto& x : G.elements) {
    FrobeniusImage img{x, std::nullopt};
    const Vector cx = scale(x, c);
    if (!M.contains(cx)) {
      img.target = cx;
      out.is_zero = false;
      if (!in_seminormalization(M, cx)) out.support_law = false;
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

NilpotenceWitness nilpotence_witness(const AffineMonoid& M, const GapModule& G, unsigned limit) {
  NilpotenceWitness out;
  for (unsigned c = 2; c <= limit && !out.c0; ++c) {
    bool zero = true;
    for (const auto& x : G.elements)
      if (!M.contains(scale(x, c))) {
        zero = false;
        break;
      }
    if (zero) out.c0 = Integer(c);
  }
  out.kills_every_c_at_least_2 = true;
  for (const auto& x : G.elements) {
    if (!M.contains(scale(x, 2)) || !M.contains(scale(x, 3))) out.kills_every_c_at_least_2 = false;
    out.stable_from.emplace_back(x, stable_multiple(M, x, limit));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::VerifiedUpToBound: return "verified up to bound";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool ConjectureK0Report::passed() const {
  for (const auto& c : clauses)
    if (c.verdict != Verdict::Pass && c.verdict != Verdict::VerifiedUpToBound) return false;
  return true;
}

ConjectureK0Report verify_conjecture_k0(const AffineMonoid& M, const Integer& bound) {
  if (!M.is_positive()) throw HypothesisError("positive", "the K_0 conjecture check needs a positive monoid");
  ConjectureK0Report rep;
  rep.gap = gap(M, bound);
  rep.gap_finite_known = !rep.gap.truncated;
  const Verdict ok = rep.gap.truncated ? Verdict::VerifiedUpToBound : Verdict::Pass;
  const Integer D = rep.gap.parallelepiped_degree;
  const Integer cap = std::max(bound, Integer(4 * (D + rep.gap.window)));

  // (a) conductor elements, searched with doubling degree
  ClauseReport a{"a", ok, ""};
  for (const auto& F : nonzero_faces(M.cone())) {
    ConductorCertificate cert;
    for (Integer s = std::min(cap, std::max(D, Integer(8)));; s = std::min(cap, Integer(2 * s))) {
      cert = conductor_element(M, F, s, &rep.gap);
      if (cert.found || s == cap) break;
    }
    if (!cert.found) {
      if (a.verdict != Verdict::Fail) a.verdict = Verdict::Inconclusive;
      a.detail += "no conductor element up to degree " + cert.search_degree.get_str() + " on " + F.to_string() + "; ";
    } else if (!cert.avoids_gap) {
      a.verdict = Verdict::Fail;
      a.detail += "gap meets m_F + F for " + F.to_string() + "; ";
    }
    rep.conductors.push_back(std::move(cert));
  }
  if (a.detail.empty()) a.detail = std::to_string(rep.conductors.size()) + " faces certified";

  // (b) Frobenius support law
  ClauseReport b{"b", ok, "Supp(c_* x) in c Supp(x) for c = 2, 3, 5"};
  for (int c : {2, 3, 5}) {
    rep.frobenius.push_back(frobenius_on_gap(M, c, rep.gap));
    if (!rep.frobenius.back().support_law) {
      b.verdict = Verdict::Fail;
      b.detail = "support law fails for c = " + std::to_string(c);
    }
  }
  rep.nilpotence = nilpotence_witness(M, rep.gap);

  // (c) the quotient module action m.[x] = [m + x] against c_*(m x) = m^c c_*(x)
  ClauseReport cc{"c", ok, "c_*(m x) = m^c c_*(x) on generators of M and the listed gap, c = 2, 3, 5"};
  for (int c : {2, 3, 5})
    for (const auto& m : M.generators())
      for (const auto& x : rep.gap.elements) {
        const Vector mx = m + x;
        std::optional<Vector> lhs, rhs;
        if (!M.contains(mx) && !M.contains(scale(mx, c))) lhs = scale(mx, c);
        const Vector cx = scale(x, c);
        if (!M.contains(cx) && !M.contains(scale(m, c) + cx)) rhs = scale(m, c) + cx;
        if (lhs != rhs) {
          cc.verdict = Verdict::Fail;
          cc.detail = "module compatibility fails at m = " + toricss::to_string(m) + ", x = " + toricss::to_string(x);
        }
      }

  // (d) M-minimal gap elements all have degree <= D, so J is found exactly
  const GapModule low = bound >= D ? rep.gap : gap(M, D);
  for (const auto& x : low.elements) {
    bool minimal = true;
    for (const auto& y : low.elements)
      if (y != x && M.contains(x - y)) {
        minimal = false;
        break;
      }
    if (minimal) rep.module_generators.push_back(x);
  }
  ClauseReport d{"d", Verdict::Pass,
                 "generated over R[M] by " + std::to_string(rep.module_generators.size()) + " gap elements; gap " +
                     (rep.gap_finite_known ? "finite (" + std::to_string(rep.gap.elements.size()) + ")"
                                           : std::string("finiteness not certified up to the bound"))};

  rep.clauses = {a, b, cc, d};
  return rep;
}

}  // namespace toricss
