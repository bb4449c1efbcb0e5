#include "toricss/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "toricss/errors.hpp"
#include "toricss/kh.hpp"
#include "toricss/monoid.hpp"
#include "toricss/oracles.hpp"

namespace toricss::acceptance {

namespace {

struct NamedFan {
  std::string name;
  Fan fan;
};

std::vector<NamedFan> betti_catalog() {
  return {{"P1", catalog::projective_space(1)},
          {"P2", catalog::projective_space(2)},
          {"P3", catalog::projective_space(3)},
          {"P1xP1", catalog::product(catalog::projective_space(1), catalog::projective_space(1))},
          {"F0", catalog::hirzebruch(0)},
          {"F1", catalog::hirzebruch(1)},
          {"F2", catalog::hirzebruch(2)},
          {"P(1,1,2)", catalog::weighted_projective({1, 1, 2})}};
}

// Outcome of one criterion body: an empty failure list means pass.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < 5; ++i) out += (i ? "; " : "") + xs[i];
  if (xs.size() > 5) out += "; ... (" + std::to_string(xs.size()) + " failures)";
  return out;
}

Outcome cech_vs_betti() {
  Outcome o;
  for (const auto& [name, F] : betti_catalog()) {
    const auto E2 = page2(build_E1(F));
    const auto B = betti_formula(F);
    for (std::size_t m = 0; m <= E2.total_degree(); ++m) {
      const Integer expect = m % 2 == 0 && m / 2 < B.even.size() ? B.even[m / 2] : Integer(0);
      o.require(Integer(E2.anti_diagonal(m)) == expect, name + ": anti-diagonal " + std::to_string(m));
    }
    o.require(B.sum_rule, name + ": sum of Betti numbers != #max");
  }
  o.summary = "8 catalog fans, E2 anti-diagonals = Betti formula, odd degrees 0, sum = m";
  return o;
}

Outcome corollary_c() {
  Outcome o;
  const std::vector<std::pair<std::size_t, std::size_t>> expected_m = {{0, 2}, {1, 3}, {2, 4}, {3, 4},
                                                                       {4, 4}, {5, 4}, {6, 4}, {7, 3}};
  const auto fans = betti_catalog();
  for (const auto& [i, m] : expected_m) {
    const auto R = check_corollary_c(fans[i].fan, 0, 4);
    o.require(R.certified, fans[i].name + ": not certified projective simplicial");
    o.require(R.m == m, fans[i].name + ": m = " + std::to_string(R.m));
    o.require(R.pass(), fans[i].name + ": rank table is not K_n(R)^m");
  }
  o.summary = "8 projective simplicial fans, n = 0..4: KH_n = K_n(R)^m (P2: 3, Hirzebruch: 4)";
  return o;
}

Outcome torus() {
  Outcome o;
  for (std::size_t d = 0; d <= 4; ++d) {
    const auto T = kh_table(catalog::torus(d), 2 * d + 2);
    for (const auto& row : T.rows) {
      std::vector<std::pair<std::size_t, std::size_t>> expect;
      for (std::size_t q = 0; q <= row.n; ++q)
        if (binomial(d, row.n - q)) expect.emplace_back(q, binomial(d, row.n - q));
      o.require(row.terms == expect, "d = " + std::to_string(d) + ", n = " + std::to_string(row.n));
    }
  }
  o.summary = "fan {0} in Z^d, d = 0..4: m_{n,q} = C(d, n-q)";
  return o;
}

Outcome frobenius() {
  Outcome o;
  auto fans = betti_catalog();
  fans.push_back({"A2", catalog::affine_orthant(2)});
  fans.push_back({"T3", catalog::torus(3)});
  fans.push_back({"P1xT1", catalog::product(catalog::projective_space(1), catalog::torus(1))});
  for (const auto& [name, F] : fans) {
    const auto E1 = build_E1(F);
    for (long c : {2, 3, 5}) {
      const auto R = frobenius_on_E1(E1, c);
      o.require(R.commutes_with_d1, name + ": c = " + std::to_string(c) + " does not commute with d1");
      o.require(R.row_eigenvalues, name + ": c = " + std::to_string(c) + " is not c^q on row q");
      for (long c2 : {2, 3, 5})
        o.require(frobenius_multiplicative(E1, c, c2), name + ": (cc')_* != c_* c'_*");
    }
  }
  o.summary = "11 fans, c in {2,3,5}: c_* d1 = d1 c_*, row q scaled by c^q, (cc')_* = c_* c'_*";
  return o;
}

Outcome torsion() {
  Outcome o;
  for (std::size_t r = 2; r <= 6; ++r) {
    const auto T = torsion_bound(r);
    const std::string tag = "r = " + std::to_string(r);
    o.require(T.gcd_divides_bound, tag + ": gcd does not divide the bound");
    o.require(T.odd_part_ok, tag + ": odd part");
    o.require(T.two_part_ok, tag + ": 2-part");
  }
  o.require(torsion_bound(2).bound == 2, "r = 2 bound != 2");
  o.require(torsion_bound(3).bound == 24, "r = 3 bound != 24");
  o.summary = "r = 2..6: sampled gcd divides (2^{r-1}-1)(3^{r-1}-1) with matching odd and 2-parts";
  return o;
}

Outcome monoids() {
  Outcome o;
  auto V = [](std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  const AffineMonoid M23(1, {V({2}), V({3})});
  o.require(normalization(M23).generators() == std::vector<Vector>{V({1})}, "<2,3>: n != Z+");
  o.require(seminormalization(M23).generators() == std::vector<Vector>{V({1})}, "<2,3>: sn != Z+");
  const auto r = verify_conjecture_k0(M23, 10);
  o.require(r.gap.elements == std::vector<Vector>{V({1})} && !r.gap.truncated, "<2,3>: gap != {1}");
  o.require(r.clauses[0].verdict == Verdict::Pass && r.clauses[1].verdict == Verdict::Pass,
            "<2,3>: clauses (a), (b) do not pass");
  o.require(r.conductors.size() == 1 && r.conductors[0].found && r.conductors[0].element == V({2}), "<2,3>: m_F != 2");
  o.require(r.nilpotence.c0 == Integer(2), "<2,3>: c0 != 2");

  const AffineMonoid S(2, {V({2, 0}), V({0, 1}), V({1, 1})});
  o.require(is_seminormal(S), "<(2,0),(0,1),(1,1)>: not seminormal");
  o.require(!is_normal(S), "<(2,0),(0,1),(1,1)>: normal");

  const AffineMonoid P(2, {V({2, 0}), V({3, 0}), V({0, 1}), V({1, 1})});
  const auto g = gap(P, 12);
  o.require(g.elements == std::vector<Vector>{V({1, 0})} && !g.truncated, "<(2,0),(3,0),(0,1),(1,1)>: gap != {(1,0)}");
  const auto w = nilpotence_witness(P, g);
  o.require(w.kills_every_c_at_least_2, "<(2,0),(3,0),(0,1),(1,1)>: some c >= 2 does not kill the gap");
  for (int c = 2; c <= 12; ++c)
    o.require(frobenius_on_gap(P, c, g).is_zero, "<(2,0),(3,0),(0,1),(1,1)>: c = " + std::to_string(c));
  o.summary = "<2,3>, <(2,0),(0,1),(1,1)>, <(2,0),(3,0),(0,1),(1,1)>: n, sn, gaps, conductor, Frobenius";
  return o;
}

Outcome hilbert_bases() {
  Outcome o;
  for (long k = 1; k <= 5; ++k) {
    Vector e1{1, 0}, ek{1, Integer(k)};
    const Cone C = Cone::from_generators(2, {e1, ek});
    std::vector<Vector> expect;
    for (long i = 0; i <= k; ++i) expect.push_back(Vector{1, Integer(i)});
    auto brute = oracle::irreducible_points_in_box(2, k + 1, [&](const Vector& x) { return C.contains(x); });
    std::sort(brute.begin(), brute.end());
    const auto hb = hilbert_basis(C, Lattice::standard(2));
    o.require(hb == expect, "k = " + std::to_string(k) + ": basis != {(1,i)}");
    o.require(hb == brute, "k = " + std::to_string(k) + ": basis != box reduction");
  }
  o.summary = "cone((1,0),(1,k)), k = 1..5: basis {(1,i)} = box reduction";
  return o;
}

Outcome proj_bounds() {
  Outcome o;
  for (std::size_t d = 1; d <= 3; ++d)
    o.require(proj_lower_bounds(standard_simplex(d)).splitting_count == d + 1,
              "simplex d = " + std::to_string(d) + ": n_P + 1 != d + 1");
  const auto sq = proj_lower_bounds(unit_cube(2));
  o.require(sq.splitting_count == 2 && sq.vertex_count == 4, "unit square: expected n_P + 1 = 2 < 4 = #vert");
  o.summary = "simplices d = 1..3: n_P + 1 = d + 1; unit square: 2 < 4 vertices";
  return o;
}

Outcome linear_algebra() {
  Outcome o;
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  auto unimodular = [](const IntegerMatrix& U) {
    const Integer d = determinant(U);
    return U.rows() == U.cols() && (d == 1 || d == -1);
  };
  for (int t = 0; t < 500; ++t) {
    const auto A = oracle::random_matrix(dim(rng), dim(rng), 20, rng);
    const auto s = smith_normal_form(A);
    if (!(s.U * A * s.V == s.D) || !unimodular(s.U) || !unimodular(s.V) || !oracle::is_diagonal_chain(s.D))
      o.failures.push_back("smith form, trial " + std::to_string(t));
  }
  std::uniform_int_distribution<std::size_t> small(1, 5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = small(rng), m = small(rng), n = small(rng);
    const auto f = oracle::random_matrix(k, m, 20, rng);
    const auto g = oracle::random_matrix(m, n, 20, rng);
    for (std::size_t a = 0; a <= std::min({k, m, n}); ++a)
      if (!(exterior_power_map(f * g, a) == exterior_power_map(f, a) * exterior_power_map(g, a)))
        o.failures.push_back("exterior power, pair " + std::to_string(t));
  }
  std::uniform_int_distribution<std::size_t> kd(1, 4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = kd(rng);
    const auto A = oracle::random_matrix(kd(rng), 2, 4, rng) * oracle::random_matrix(2, n, 4, rng);
    const Lattice K = kernel_lattice(A);
    bool ok = (A * K.basis().transpose()).is_zero() && K.rank() == n - oracle::rank_by_minors(A);
    for (const auto& x : oracle::box_points(n, 3))
      if (is_zero(A * x) && !K.contains(x)) ok = false;
    if (!ok) o.failures.push_back("kernel saturation, trial " + std::to_string(t));
  }
  o.summary = "500 smith forms, 200 composable exterior-power pairs, 60 kernels against box enumeration";
  return o;
}

}  // namespace

std::vector<CriterionResult> run_all() {
  struct Spec {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> body;
  };
  const std::vector<Spec> specs = {{1, "cech-vs-betti", 10, cech_vs_betti},
                                   {2, "kh-projective-simplicial", 5, corollary_c},
                                   {3, "torus", 1, torus},
                                   {4, "frobenius-weights", 10, frobenius},
                                   {5, "torsion-bound", 1, torsion},
                                   {6, "monoids", 5, monoids},
                                   {7, "hilbert-basis", 5, hilbert_bases},
                                   {8, "proj-lower-bounds", 1, proj_bounds},
                                   {9, "linear-algebra", 30, linear_algebra}};
  std::vector<CriterionResult> out;
  for (const auto& s : specs) {
    CriterionResult r;
    r.id = s.id;
    r.name = s.name;
    r.budget = s.budget;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = s.body();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.budget) o.failures.push_back("over the time budget of " + std::to_string(int(r.budget)) + " s");
    r.pass = o.failures.empty();
    r.detail = r.pass ? o.summary : join(o.failures);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace toricss::acceptance
