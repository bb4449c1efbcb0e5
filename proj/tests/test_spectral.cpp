#include <random>

#include "catch_amalgamated.hpp"
#include "test_util.hpp"
#include "toricss/errors.hpp"
#include "toricss/spectral.hpp"

using namespace toricss;
using test::vec;

namespace {

std::vector<Fan> catalog_fans() {
  return {catalog::projective_space(1), catalog::projective_space(2), catalog::projective_space(3),
          catalog::product(catalog::projective_space(1), catalog::projective_space(1)),
          catalog::hirzebruch(0), catalog::hirzebruch(1), catalog::hirzebruch(2),
          catalog::weighted_projective({1, 1, 2})};
}

std::vector<std::size_t> anti_diagonals(const SpectralPage& E2) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m <= E2.total_degree(); ++m) out.push_back(E2.anti_diagonal(m));
  return out;
}

// a fan made of some of the maximal cones of F
Fan subfan(const Fan& F, const std::vector<std::size_t>& keep) {
  std::vector<Cone> cones;
  for (std::size_t i : keep) cones.push_back(F.max_cones()[i]);
  return Fan::from_max_cones(F.dim(), cones);
}

}  // namespace

TEST_CASE("nerves") {
  const Nerve P1 = Nerve::build(catalog::projective_space(1));
  REQUIRE(P1.levels() == 2);
  CHECK(P1.level(0).size() == 2);
  CHECK(P1.level(0)[0].m.rank() == 0);
  REQUIRE(P1.level(1).size() == 1);
  CHECK(P1.level(1)[0].m == Lattice::standard(1));
  CHECK(P1.level(1)[0].cone.is_zero());

  const Nerve P2 = Nerve::build(catalog::projective_space(2));
  REQUIRE(P2.levels() == 3);
  for (std::size_t p = 0; p < 3; ++p) {
    CHECK(P2.level(p).size() == (p == 1 ? 3u : p == 0 ? 3u : 1u));
    for (const auto& t : P2.level(p)) CHECK(t.m.rank() == p);
  }
  // faces and inclusions
  for (std::size_t t = 0; t < P2.level(2).size(); ++t)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& J = P2.level(1)[P2.face(2, t, j)].indices;
      auto I = P2.level(2)[t].indices;
      I.erase(I.begin() + static_cast<long>(j));
      CHECK(J == I);
      CHECK(P2.inclusion(2, t, j).rows() == 2);
      CHECK(P2.inclusion(2, t, j).cols() == 1);
    }

  CHECK(Nerve::build(catalog::affine_orthant(2)).levels() == 1);
}

TEST_CASE("E1 of small fans") {
  const auto E = build_E1(catalog::projective_space(1));
  // row 0: Z^2 -> Z, (a,b) -> b - a
  CHECK(E.d[0][0] == IntegerMatrix{{-1, 1}});
  CHECK(E.rank(0, 1) == 0);
  CHECK(E.rank(1, 1) == 1);

  const auto A = build_E1(catalog::affine_orthant(2));
  CHECK(A.max_p == 0);
  CHECK(A.rank(0, 0) == 1);
  CHECK(A.rank(0, 1) == 0);
  CHECK(A.rank(0, 2) == 0);
}

TEST_CASE("E2 examples") {
  const auto P1 = page2(build_E1(catalog::projective_space(1)));
  CHECK(P1.cell(0, 0).to_string() == "Z");
  CHECK(P1.cell(1, 1).to_string() == "Z");
  CHECK(P1.cell(1, 0).is_zero());
  CHECK(P1.cell(0, 1).is_zero());
  CHECK(anti_diagonals(P1) == std::vector<std::size_t>{1, 0, 1});

  CHECK(anti_diagonals(page2(build_E1(catalog::projective_space(2)))) == std::vector<std::size_t>{1, 0, 1, 0, 1});

  const auto A = page2(build_E1(catalog::affine_orthant(3)));
  CHECK(A.cell(0, 0).to_string() == "Z");
  CHECK(anti_diagonals(A) == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("non-complete fans match known homotopy types") {
  // P^2 minus a torus-fixed point retracts onto a line: H^* = Q, 0, Q, 0, 0
  const auto P2 = catalog::projective_space(2);
  CHECK(anti_diagonals(page2(build_E1(subfan(P2, {0, 1})))) == std::vector<std::size_t>{1, 0, 1, 0});
  // the fan of one ray in Z^2 is C x C^*, homotopic to a circle
  const auto ray = Fan::from_max_cones(2, {test::cone(2, {{1, 0}})});
  CHECK(anti_diagonals(page2(build_E1(ray))) == std::vector<std::size_t>{1, 1, 0});
  // P^1 x C^*: cohomology of S^2 x S^1
  const auto cyl = catalog::product(catalog::projective_space(1), catalog::torus(1));
  CHECK(anti_diagonals(page2(build_E1(cyl))) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("torus fans: E2 = E1 = Lambda^*(Z^d) at p = 0") {
  for (std::size_t d = 0; d <= 4; ++d) {
    const auto E1 = build_E1(catalog::torus(d));
    const auto E2 = page2(E1);
    REQUIRE(E2.max_p == 0);
    for (std::size_t q = 0; q <= d; ++q) {
      CHECK(E1.rank(0, q) == binomial(d, q));
      CHECK(E2.cell(0, q).free_rank == binomial(d, q));
      CHECK(E2.cell(0, q).invariant_factors.empty());
    }
  }
}

TEST_CASE("Betti formula") {
  auto b = [](const Fan& F) {
    std::vector<long> out;
    for (const auto& x : betti_formula(F).even) out.push_back(x.get_si());
    return out;
  };
  CHECK(b(catalog::projective_space(2)) == std::vector<long>{1, 1, 1});
  CHECK(b(catalog::hirzebruch(1)) == std::vector<long>{1, 2, 1});
  CHECK(b(catalog::weighted_projective({1, 1, 2})) == std::vector<long>{1, 1, 1});
  CHECK(b(catalog::projective_space(3)) == std::vector<long>{1, 1, 1, 1});
  const auto B = betti_formula(catalog::hirzebruch(1));
  CHECK(B.sum == 4);
  CHECK(B.sum_rule);
  CHECK_THROWS_AS(betti_formula(catalog::affine_orthant(2)), HypothesisError);
}

TEST_CASE("E2 anti-diagonals agree with the Betti formula; purity") {
  for (const auto& F : catalog_fans()) {
    const auto E2 = page2(build_E1(F));
    const auto B = betti_formula(F);
    for (std::size_t m = 0; m <= E2.total_degree(); ++m) {
      if (m % 2) CHECK(E2.anti_diagonal(m) == 0);
      else if (m / 2 < B.even.size()) CHECK(Integer(E2.anti_diagonal(m)) == B.even[m / 2]);
      else CHECK(E2.anti_diagonal(m) == 0);
    }
    CHECK(B.sum_rule);
    CHECK(purity_check(F, E2).pass);
  }
  const auto PP = page2(build_E1(catalog::product(catalog::projective_space(1), catalog::projective_space(1))));
  CHECK(PP.rational_dim(1, 1) == 2);
}

TEST_CASE("purity detects off-weight cells") {
  const auto F = catalog::projective_space(1);
  auto E2 = page2(build_E1(F));
  E2.cells[0][1].free_rank = 1;  // plant a class at (1,0)
  const auto R = purity_check(F, E2);
  CHECK_FALSE(R.pass);
  REQUIRE(R.offending.size() == 1);
  CHECK(R.offending[0] == std::pair<std::size_t, std::size_t>{1, 0});
}

TEST_CASE("d1^2 = 0 and row Euler characteristics on random subfans") {
  std::mt19937_64 rng(41);
  const std::vector<Fan> base = {catalog::projective_space(3),
                                 catalog::product(catalog::projective_space(1),
                                                  catalog::product(catalog::projective_space(1),
                                                                   catalog::projective_space(1))),
                                 catalog::hirzebruch(2), catalog::weighted_projective({1, 2, 3})};
  for (int trial = 0; trial < 30; ++trial) {
    const Fan& F = base[trial % base.size()];
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < F.max_cones().size(); ++i)
      if (rng() % 2) keep.push_back(i);
    if (keep.empty()) keep.push_back(0);
    const Fan G = subfan(F, keep);
    const auto E1 = build_E1(G);  // throws on d1^2 != 0
    const auto E2 = page2(E1);
    for (std::size_t q = 0; q <= E1.max_q; ++q) {
      long chi1 = 0, chi2 = 0;
      for (std::size_t p = 0; p <= E1.max_p; ++p) {
        chi1 += (p % 2 ? -1 : 1) * static_cast<long>(E1.rank(p, q));
        chi2 += (p % 2 ? -1 : 1) * static_cast<long>(E2.rational_dim(p, q));
      }
      REQUIRE(chi1 == chi2);
    }
    // rows above the largest M-rank vanish
    std::size_t top = 0;
    for (const auto& level : E1.block_ranks)
      for (std::size_t r : level) top = std::max(top, r);
    for (std::size_t q = top + 1; q <= E1.max_q; ++q)
      for (std::size_t p = 0; p <= E1.max_p; ++p) REQUIRE(E1.rank(p, q) == 0);
  }
}

TEST_CASE("Frobenius on E1") {
  for (const auto& F : catalog_fans()) {
    const auto E1 = build_E1(F);
    for (long c : {1, 2, 3, 5}) {
      const auto R = frobenius_on_E1(E1, c);
      CHECK(R.commutes_with_d1);
      CHECK(R.row_eigenvalues);
      for (std::size_t q = 0; q <= E1.max_q; ++q) {
        Integer cq = 1;
        for (std::size_t i = 0; i < q; ++i) cq *= c;
        CHECK(R.row_scalars[q] == cq);
      }
      if (c == 1)
        for (std::size_t q = 0; q <= E1.max_q; ++q)
          for (std::size_t p = 0; p <= E1.max_p; ++p)
            CHECK(R.maps[q][p] == IntegerMatrix::identity(E1.rank(p, q)));
    }
    CHECK(frobenius_multiplicative(E1, 2, 3));
    CHECK(frobenius_multiplicative(E1, 5, 5));
  }
  const auto R = frobenius_on_E1(build_E1(catalog::projective_space(2)), 2);
  CHECK(R.row_scalars == std::vector<Integer>{1, 2, 4});
  CHECK_THROWS(frobenius_on_E1(build_E1(catalog::projective_space(1)), 0));
}

TEST_CASE("weight graded pieces") {
  const auto P2 = page2(build_E1(catalog::projective_space(2)));
  CHECK(weight_graded_pieces(P2, 2) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {2, 1}, {4, 0}});
  const auto P1 = page2(build_E1(catalog::projective_space(1)));
  CHECK(weight_graded_pieces(P1, 0) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  const auto T2 = page2(build_E1(catalog::torus(2)));
  CHECK(weight_graded_pieces(T2, 1) == std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}});
}

TEST_CASE("torsion bound") {
  const auto t2 = torsion_bound(2);
  CHECK(t2.bound == 2);
  CHECK(t2.empirical_gcd == 1);  // c = 2, q = 1 gives 2^0 (2 - 1)
  CHECK(t2.gcd_divides_bound);
  CHECK(torsion_bound(3).bound == 24);
  for (std::size_t r = 2; r <= 6; ++r) {
    const auto t = torsion_bound(r);
    CHECK(t.gcd_divides_bound);
    CHECK(t.odd_part_ok);
    CHECK(t.two_part_ok);
    // direct gcd over the same sample
    Integer g = 0;
    for (long c = 2; c <= 7; ++c)
      for (std::size_t q = r - 1; q <= r + 4; ++q) {
        Integer a = 1, b = 1;
        for (std::size_t i = 0; i < q - r + 1; ++i) a *= c;
        for (std::size_t i = 0; i < r - 1; ++i) b *= c;
        g = gcd(g, a * (b - 1));
      }
    CHECK(t.empirical_gcd == g);
  }
  CHECK_THROWS_AS(torsion_bound(1), HypothesisError);
}

TEST_CASE("symbolic K first page") {
  using Cell = KSymbolicCell;
  const auto P1 = kh_E1_symbolic(Nerve::build(catalog::projective_space(1)), 3);
  CHECK(P1.at({1, 1}) == Cell{{0, 1}, {1, 1}});
  CHECK(P1.at({0, 0}) == Cell{{0, 2}});
  CHECK(P1.at({0, 2}) == Cell{{2, 2}});  // all M-ranks 0 at p = 0

  for (const auto& F : catalog_fans()) {
    const Nerve N = Nerve::build(F);
    const auto E1 = build_E1(N);
    const auto S = kh_E1_symbolic(N, E1.max_q);
    for (std::size_t p = 0; p <= E1.max_p; ++p) {
      CHECK(S.at({p, 0}) == Cell{{0, N.level(p).size()}});
      for (std::size_t q = 0; q <= E1.max_q; ++q) {
        std::size_t j0 = 0;
        for (const auto& [j, m] : S.at({p, q}))
          if (j == 0) j0 = m;
        CHECK(j0 == E1.rank(p, q));
      }
    }
  }
}
