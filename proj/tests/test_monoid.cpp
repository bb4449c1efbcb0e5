#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "catch_amalgamated.hpp"
#include "test_util.hpp"
#include "toricss/errors.hpp"
#include "toricss/monoid.hpp"
#include "toricss/oracles.hpp"

using namespace toricss;
using test::vec;
using test::vecs;

namespace {

AffineMonoid monoid(std::size_t rank, std::initializer_list<std::initializer_list<long>> gens) {
  return AffineMonoid(rank, vecs(gens));
}

// x in M by enumerating coefficient vectors; generators must have nonnegative
// coordinates with at least one positive entry.
bool member_by_enumeration(const std::vector<Vector>& gens, const Vector& x) {
  std::function<bool(std::size_t, const Vector&)> rec = [&](std::size_t i, const Vector& y) {
    for (const auto& c : y)
      if (c < 0) return false;
    if (is_zero(y)) return true;
    if (i == gens.size()) return false;
    for (Vector z = y;; z = z - gens[i]) {
      bool nonneg = true;
      for (const auto& c : z)
        if (c < 0) nonneg = false;
      if (!nonneg) return false;
      if (rec(i + 1, z)) return true;
    }
  };
  return rec(0, x);
}

// Monoid elements of a rank-2 monoid with nonnegative generators inside
// [0, side]^2, by dynamic programming in row-major order.
class Reachable2 {
 public:
  Reachable2(const std::vector<Vector>& gens, long side) : side_(side), table_((side + 1) * (side + 1), false) {
    table_[0] = true;
    for (long a = 0; a <= side; ++a)
      for (long b = 0; b <= side; ++b)
        for (const auto& g : gens) {
          const long ga = g[0].get_si(), gb = g[1].get_si();
          if (a >= ga && b >= gb && table_[(a - ga) * (side + 1) + (b - gb)]) {
            table_[a * (side + 1) + b] = true;
            break;
          }
        }
  }
  bool contains(long a, long b) const { return table_.at(a * (side_ + 1) + b); }

 private:
  long side_;
  std::vector<bool> table_;
};

// The definition: cx in M for every c >= some c0, witnessed on [c0, 2 c0 - 1].
bool in_sn_by_definition(const Reachable2& R, const Vector& x, int max_c0) {
  for (int c0 = 1; c0 <= max_c0; ++c0) {
    bool all = true;
    for (int c = c0; c <= 2 * c0 - 1 && all; ++c) all = R.contains(c * x[0].get_si(), c * x[1].get_si());
    if (all) return true;
  }
  return false;
}

bool in_n_by_definition(const std::vector<Vector>& gens, const Vector& x) {
  for (int c = 1; c <= 24; ++c)
    if (member_by_enumeration(gens, scale(x, c))) return true;
  return false;
}

std::vector<Vector> random_generators(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<long> coord(0, 3);
  std::uniform_int_distribution<int> count(2, 4);
  std::vector<Vector> gens;
  for (int k = count(rng); k > 0; --k) {
    Vector g(rank);
    for (auto& x : g) x = coord(rng);
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) gens.push_back(Vector(rank, 1));
  return gens;
}

}  // namespace

TEST_CASE("groups, units and positivity") {
  const auto M23 = monoid(1, {{2}, {3}});
  CHECK(group_of_differences(M23) == Lattice::standard(1));
  CHECK(units(M23).rank() == 0);
  CHECK(is_positive(M23));

  const auto Z = monoid(1, {{1}, {-1}});
  CHECK(units(Z) == Lattice::standard(1));
  CHECK_FALSE(is_positive(Z));
  CHECK(Z.contains(vec({-5})));
  CHECK_THROWS_AS(Z.grading(), HypothesisError);

  const auto M = monoid(2, {{2, 0}, {0, 1}, {1, 1}});
  CHECK(group_of_differences(M) == Lattice::standard(2));
  CHECK(is_positive(M));

  const auto half = monoid(2, {{1, 0}, {-1, 0}, {0, 1}});
  CHECK_FALSE(is_positive(half));
  CHECK(units(half) == Lattice::generated_by(2, {vec({1, 0})}));
  CHECK_THROWS_AS(half.contains(vec({0, 1})), HypothesisError);
}

TEST_CASE("gradings") {
  CHECK(monoid(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).grading().values == vec({1, 1, 1}));
  CHECK(monoid(1, {{2}, {3}}).grading().values == vec({1}));
  const auto M = monoid(2, {{2, 0}, {0, 1}, {1, 1}});
  const auto& g = M.grading();
  CHECK(g.values == vec({1, 1}));
  CHECK(g.degree(vec({2, 0})) == 2);
  CHECK(g.degree(vec({0, 1})) == 1);
  CHECK(g.degree(vec({1, 1})) == 2);
}

TEST_CASE("membership") {
  const auto M = monoid(1, {{2}, {3}});
  CHECK(M.contains(vec({7})));
  CHECK_FALSE(M.contains(vec({1})));
  CHECK(M.contains(vec({0})));
  CHECK_FALSE(M.contains(vec({-2})));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rank = 2 + trial % 2;
    const auto gens = random_generators(rng, rank);
    const AffineMonoid N(rank, gens);
    for (const auto& x : oracle::box_points(rank, rank == 2 ? 6 : 3)) {
      bool nonneg = true;
      for (const auto& c : x)
        if (c < 0) nonneg = false;
      if (!nonneg) continue;
      REQUIRE(N.contains(x) == member_by_enumeration(gens, x));
    }
  }
}

TEST_CASE("Hilbert bases") {
  CHECK(hilbert_basis(test::cone(2, {{1, 0}, {0, 1}}), Lattice::standard(2)) == vecs({{0, 1}, {1, 0}}));
  CHECK(hilbert_basis(test::cone(2, {{1, 0}, {1, 2}}), Lattice::standard(2)) == vecs({{1, 0}, {1, 1}, {1, 2}}));
  CHECK_THROWS_AS(hilbert_basis(test::cone(2, {{1, 0}, {-1, 0}}), Lattice::standard(2)), HypothesisError);
  CHECK(hilbert_basis(Cone::zero(2), Lattice::standard(2)).empty());

  SECTION("cone((1,0),(1,k)) against box reduction") {
    for (long k = 1; k <= 5; ++k) {
      const Cone C = Cone::from_generators(2, {vec({1, 0}), vec({1, k})});
      std::vector<Vector> expected;
      for (long i = 0; i <= k; ++i) expected.push_back(vec({1, i}));
      CHECK(hilbert_basis(C, Lattice::standard(2)) == expected);
      auto brute = oracle::irreducible_points_in_box(2, k + 1, [&](const Vector& x) { return C.contains(x); });
      std::sort(brute.begin(), brute.end());
      CHECK(brute == expected);
    }
  }

  SECTION("random orthant cones against box reduction") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rank = 2 + trial % 2;
      const auto gens = random_generators(rng, rank);
      const Cone C = Cone::from_generators(rank, gens);
      if (C.dimension() < rank) continue;
      long box = 0;
      for (const auto& r : C.rays())
        for (const auto& x : r) box += x.get_si();
      auto brute = oracle::irreducible_points_in_box(rank, box, [&](const Vector& x) { return C.contains(x); });
      std::sort(brute.begin(), brute.end());
      REQUIRE(hilbert_basis(C, Lattice::standard(rank)) == brute);
    }
  }

  SECTION("sublattices and lower-dimensional cones") {
    // even lattice in the plane: cone((1,0),(0,1)) n {x+y even}
    const Lattice even = Lattice::generated_by(2, {vec({2, 0}), vec({1, 1})});
    CHECK(hilbert_basis(test::cone(2, {{1, 0}, {0, 1}}), even) == vecs({{0, 2}, {1, 1}, {2, 0}}));
    // a 2-dimensional cone in Z^3
    CHECK(hilbert_basis(test::cone(3, {{1, 0, 1}, {1, 2, 1}}), Lattice::standard(3)) ==
          vecs({{1, 0, 1}, {1, 1, 1}, {1, 2, 1}}));
  }
}

TEST_CASE("normalization and seminormalization examples") {
  const auto M23 = monoid(1, {{2}, {3}});
  CHECK(normalization(M23).generators() == vecs({{1}}));
  CHECK(seminormalization(M23).generators() == vecs({{1}}));
  CHECK_FALSE(is_normal(M23));
  CHECK_FALSE(is_seminormal(M23));

  const auto M = monoid(2, {{2, 0}, {0, 1}, {1, 1}});
  CHECK(normalization(M).generators() == vecs({{0, 1}, {1, 0}}));
  CHECK(seminormalization(M) == M);
  CHECK(is_seminormal(M));
  CHECK_FALSE(is_normal(M));

  const auto Mp = monoid(2, {{2, 0}, {3, 0}, {0, 1}, {1, 1}});
  CHECK(seminormalization(Mp).generators() == vecs({{0, 1}, {1, 0}}));

  const auto Z2 = monoid(2, {{1, 0}, {0, 1}});
  CHECK(normalization(Z2) == Z2);
  CHECK(is_normal(Z2));
  CHECK(is_seminormal(Z2));

  for (const auto& N : {M23, M, Mp, Z2}) {
    const auto c = cross_check_seminormality(N, 12);
    CHECK(c.consistent);
    CHECK(c.witness.has_value() == !is_seminormal(N));
  }
}

TEST_CASE("random monoids: M in sn(M) in n(M), idempotence, definitions") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t rank = 2 + (trial % 3 == 0 ? 1 : 0);
    const auto gens = random_generators(rng, rank);
    const AffineMonoid M(rank, gens);
    const AffineMonoid N = normalization(M);
    const AffineMonoid S = seminormalization(M);
    for (const auto& g : M.generators()) {
      REQUIRE(S.contains(g));
      REQUIRE(N.contains(g));
    }
    for (const auto& g : S.generators()) REQUIRE(N.contains(g));
    REQUIRE(normalization(N) == N);
    REQUIRE(seminormalization(S) == S);
    REQUIRE(is_normal(N));
    REQUIRE(is_seminormal(S));

    // Hilbert basis minimality by membership
    for (const auto& h : N.generators())
      for (const auto& a : N.generators())
        if (a != h) REQUIRE_FALSE(N.contains(h - a));

    // face formula for sn and cone formula for n against the definitions
    const Grading& gr = M.grading();
    const auto elements = elements_up_to_degree(N.generators(), gr, rank == 2 ? 6 : 4);
    std::optional<Reachable2> R;
    if (rank == 2) {
      long side = 0;
      for (const auto& x : elements) side = std::max({side, x[0].get_si(), x[1].get_si()});
      R.emplace(M.generators(), 79 * side);
    }
    for (const auto& x : elements) {
      INFO("generators " << test::show(M.generators()) << " x " << test::show({x}));
      if (R) REQUIRE(in_seminormalization(M, x) == in_sn_by_definition(*R, x, 40));
      REQUIRE(in_normalization(M, x) == in_n_by_definition(M.generators(), x));
      REQUIRE(S.contains(x) == in_seminormalization(M, x));
      if (!is_zero(x)) REQUIRE(gr.degree(x) > 0);
    }
    for (const auto& a : M.generators())
      for (const auto& b : M.generators()) REQUIRE(gr.degree(a + b) == gr.degree(a) + gr.degree(b));

    const auto check = cross_check_seminormality(M, 8);
    REQUIRE(check.consistent);
  }
}

TEST_CASE("faces absorb summands: M n F is generated by the generators on F") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto gens = random_generators(rng, 2);
    const AffineMonoid M(2, gens);
    for (const auto& F : M.cone().faces()) {
      const auto on = M.generators_on(F);
      for (const auto& x : oracle::box_points(2, 6))
        if (F.contains(x) && M.contains(x)) REQUIRE((is_zero(x) || member_by_enumeration(on, x)));
    }
  }
}

TEST_CASE("gap sets") {
  const auto M23 = monoid(1, {{2}, {3}});
  const auto g1 = gap(M23, 10);
  CHECK(g1.elements == vecs({{1}}));
  CHECK_FALSE(g1.truncated);

  const auto Mp = monoid(2, {{2, 0}, {3, 0}, {0, 1}, {1, 1}});
  const auto g2 = gap(Mp, 10);
  CHECK(g2.elements == vecs({{1, 0}}));
  CHECK_FALSE(g2.truncated);

  CHECK(gap(monoid(2, {{1, 0}, {0, 1}}), 7).elements.empty());
  CHECK_FALSE(gap(monoid(2, {{1, 0}, {0, 1}}), 7).truncated);

  // infinite gap: (1, k) for every k
  const auto inf = gap(monoid(2, {{2, 0}, {3, 0}, {0, 1}}), 10);
  CHECK(inf.truncated);
  CHECK(inf.elements.size() == 10);

  // a cusp-like monoid with larger gap: <3,5>, sn = Z+, gap {1,2,4,7}
  const auto g35 = gap(monoid(1, {{3}, {5}}), 20);
  CHECK(g35.elements == vecs({{1}, {2}, {4}, {7}}));
  CHECK_FALSE(g35.truncated);

  // a bound that is too small is reported as truncated
  CHECK(gap(monoid(1, {{3}, {5}}), 3).truncated);
}

TEST_CASE("conductor elements") {
  const auto M23 = monoid(1, {{2}, {3}});
  const auto g = gap(M23, 10);
  const auto c = conductor_element(M23, M23.cone(), 20, &g);
  REQUIRE(c.found);
  CHECK(c.element == vec({2}));
  CHECK(c.avoids_gap);

  const auto Z2 = monoid(2, {{1, 0}, {0, 1}});
  const auto x_axis = test::cone(2, {{1, 0}});
  const auto c2 = conductor_element(Z2, x_axis, 10);
  REQUIRE(c2.found);
  CHECK(c2.element == vec({1, 0}));

  const auto Mp = monoid(2, {{2, 0}, {3, 0}, {0, 1}, {1, 1}});
  const auto gp = gap(Mp, 10);
  const auto c3 = conductor_element(Mp, x_axis, 20, &gp);
  REQUIRE(c3.found);
  CHECK(c3.element == vec({2, 0}));
  CHECK(c3.avoids_gap);

  const auto none = conductor_element(monoid(1, {{3}, {5}}), monoid(1, {{3}, {5}}).cone(), 4);
  CHECK_FALSE(none.found);  // 8 is the answer; the search stops at degree 4

  CHECK_THROWS(conductor_element(Z2, test::cone(2, {{1, 1}}), 10));
}

TEST_CASE("conductor certificates against enumeration of n(M n F)") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const auto gens = random_generators(rng, 2);
    const AffineMonoid M(2, gens);
    for (const auto& F : M.cone().faces()) {
      if (F.is_zero()) continue;
      const auto cert = conductor_element(M, F, 40);
      REQUIRE(cert.found);
      REQUIRE(F.contains_in_relative_interior(cert.element));
      REQUIRE(M.contains(cert.element));
      const AffineMonoid MF(2, M.generators_on(F));
      const AffineMonoid NF = normalization(MF);
      for (const auto& y : elements_up_to_degree(NF.generators(), M.grading(), 8))
        REQUIRE(M.contains(cert.element + y));
    }
  }
}

TEST_CASE("Frobenius on the gap") {
  const auto M23 = monoid(1, {{2}, {3}});
  const auto g = gap(M23, 10);
  const auto f2 = frobenius_on_gap(M23, 2, g);
  CHECK(f2.is_zero);
  CHECK(f2.support_law);
  const auto f1 = frobenius_on_gap(M23, 1, g);
  REQUIRE(f1.images.size() == 1);
  CHECK(f1.images[0].target == vec({1}));
  const auto w = nilpotence_witness(M23, g);
  CHECK(w.c0 == Integer(2));
  CHECK(w.kills_every_c_at_least_2);

  const auto Mp = monoid(2, {{2, 0}, {3, 0}, {0, 1}, {1, 1}});
  const auto gp = gap(Mp, 10);
  CHECK(frobenius_on_gap(Mp, 3, gp).is_zero);
  CHECK(nilpotence_witness(Mp, gp).kills_every_c_at_least_2);

  // <3,5>: 2 * 2 = 4 is still a gap element
  const auto M35 = monoid(1, {{3}, {5}});
  const auto g35 = gap(M35, 20);
  const auto f = frobenius_on_gap(M35, 2, g35);
  CHECK_FALSE(f.is_zero);
  CHECK(f.support_law);
  for (const auto& img : f.images)
    if (img.target) CHECK(*img.target == scale(img.source, 2));
  const auto w35 = nilpotence_witness(M35, g35);
  CHECK(w35.c0 == Integer(3));  // 3, 6, 12, 21 all lie in <3,5>; 2 * 2 does not
}

TEST_CASE("K0 conjecture reports") {
  const auto r = verify_conjecture_k0(monoid(1, {{2}, {3}}), 10);
  CHECK(r.passed());
  CHECK(r.gap.elements == vecs({{1}}));
  REQUIRE(r.conductors.size() == 1);
  CHECK(r.conductors[0].element == vec({2}));
  CHECK(r.nilpotence.c0 == Integer(2));
  for (const auto& c : r.clauses) CHECK(c.verdict == Verdict::Pass);

  const auto z = verify_conjecture_k0(monoid(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 5);
  CHECK(z.passed());
  CHECK(z.gap.elements.empty());

  const auto p = verify_conjecture_k0(monoid(2, {{2, 0}, {3, 0}, {0, 1}, {1, 1}}), 10);
  CHECK(p.passed());
  CHECK(p.gap.elements == vecs({{1, 0}}));
  CHECK(p.module_generators == vecs({{1, 0}}));

  const auto inf = verify_conjecture_k0(monoid(2, {{2, 0}, {3, 0}, {0, 1}}), 8);
  CHECK(inf.passed());
  CHECK(inf.clauses[0].verdict == Verdict::VerifiedUpToBound);
  CHECK(inf.module_generators == vecs({{1, 0}}));  // (1,k) = (1,0) + k (0,1)

  CHECK_THROWS_AS(verify_conjecture_k0(monoid(1, {{1}, {-1}}), 3), HypothesisError);
}
