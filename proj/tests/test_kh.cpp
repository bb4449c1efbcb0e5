#include "catch_amalgamated.hpp"
#include "test_util.hpp"
#include "toricss/errors.hpp"
#include "toricss/kh.hpp"

using namespace toricss;

namespace {

using Terms = std::vector<std::pair<std::size_t, std::size_t>>;

Fan subfan(const Fan& F, const std::vector<std::size_t>& keep) {
  std::vector<Cone> cones;
  for (std::size_t i : keep) cones.push_back(F.max_cones()[i]);
  return Fan::from_max_cones(F.dim(), cones);
}

}  // namespace

TEST_CASE("regimes") {
  CHECK(classify_regime(catalog::projective_space(2)).fan_class == FanClass::ProjectiveSimplicial);
  CHECK(classify_regime(catalog::projective_space(2)).weight_provenance == "deligne");
  CHECK(classify_regime(catalog::affine_orthant(2)).fan_class == FanClass::QuasiProjective);
  CHECK(classify_regime(catalog::affine_orthant(2)).weight_provenance == "n-weight");
  CHECK(classify_regime(catalog::torus(3)).fan_class == FanClass::QuasiProjective);
  CHECK(to_string(FanClass::CompleteSimplicial) == "complete-simplicial");
}

TEST_CASE("rank tables") {
  const auto P1 = kh_table(catalog::projective_space(1), 4);
  for (const auto& row : P1.rows) CHECK(row.terms == Terms{{row.n, 2}});

  for (std::size_t d = 0; d <= 4; ++d) {
    const auto T = kh_table(catalog::torus(d), 6);
    for (const auto& row : T.rows) {
      Terms expected;
      for (std::size_t q = 0; q <= row.n; ++q)
        if (binomial(d, row.n - q) > 0) expected.emplace_back(q, binomial(d, row.n - q));
      CHECK(row.terms == expected);
    }
  }

  CHECK(kh_table(catalog::projective_space(2), 0).rows[0].terms == Terms{{0, 3}});

  // C x C^*: one ray in Z^2
  const auto ray = Fan::from_max_cones(2, {test::cone(2, {{1, 0}})});
  const auto R = kh_table(ray, 2);
  CHECK(R.rows[0].terms == Terms{{0, 1}});
  CHECK(R.rows[1].terms == Terms{{0, 1}, {1, 1}});
}

TEST_CASE("three assembly routes agree") {
  const std::vector<Fan> fans = {catalog::projective_space(1),
                                 catalog::projective_space(2),
                                 catalog::hirzebruch(2),
                                 catalog::weighted_projective({1, 1, 2}),
                                 catalog::torus(3),
                                 catalog::affine_orthant(2),
                                 subfan(catalog::projective_space(3), {0, 2}),
                                 subfan(catalog::projective_space(2), {1, 2}),
                                 catalog::product(catalog::projective_space(1), catalog::torus(1))};
  for (const auto& F : fans) {
    const Nerve N = Nerve::build(F);
    const auto E1 = build_E1(N);
    const auto E2 = page2(E1);
    for (std::size_t n = 0; n <= 2 * F.dim() + 1; ++n) {
      const auto a = kh_ranks(E2, n);
      CHECK(a == kh_ranks_by_weights(E2, n));
      CHECK(a == kh_ranks_symbolic(N, E1, E2, n));
    }
  }
}

TEST_CASE("KH_n = K_n(R)^m on projective simplicial catalog fans") {
  struct Case {
    Fan fan;
    std::size_t m;
  };
  const std::vector<Case> cases = {{catalog::projective_space(1), 2},
                                   {catalog::projective_space(2), 3},
                                   {catalog::projective_space(3), 4},
                                   {catalog::product(catalog::projective_space(1), catalog::projective_space(1)), 4},
                                   {catalog::hirzebruch(0), 4},
                                   {catalog::hirzebruch(1), 4},
                                   {catalog::hirzebruch(2), 4},
                                   {catalog::weighted_projective({1, 1, 2}), 3}};
  for (const auto& c : cases) {
    const auto R = check_corollary_c(c.fan, 0, 4);
    CHECK(R.certified);
    CHECK(R.m == c.m);
    CHECK(R.pass());
    for (const auto& row : R.rows) CHECK(row.total() == c.m);
  }
  const auto informational = check_corollary_c(catalog::affine_orthant(2), 0, 2);
  CHECK_FALSE(informational.certified);
  CHECK_FALSE(informational.pass());
}

TEST_CASE("complete non-projective fans are labelled conjectural") {
  const auto r = test::vecs({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto c = [&](std::size_t a, std::size_t b, std::size_t d) { return Cone::from_generators(3, {r[a], r[b], r[d]}); };
  const Fan twisted = Fan::from_max_cones(
      3, {c(0, 1, 2), c(0, 1, 3), c(0, 2, 5), c(0, 3, 5), c(1, 2, 4), c(1, 3, 4), c(2, 4, 5), c(3, 4, 5)});
  const auto R = check_corollary_c(twisted, 0, 3);
  CHECK(R.regime.fan_class == FanClass::CompleteSimplicial);
  CHECK(R.regime.conjectural);
  CHECK_FALSE(R.certified);
  // the numbers still have the K_n(R)^m shape
  CHECK(R.failing.empty());
  CHECK(R.m == 8);
}

TEST_CASE("Proj lower bounds") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto B = proj_lower_bounds(standard_simplex(d));
    CHECK(B.n_P == d);
    CHECK(B.splitting_count == d + 1);
    CHECK(B.vertex_count == d + 1);
  }
  const auto sq = proj_lower_bounds(unit_cube(2));
  CHECK(sq.n_P == 1);
  CHECK(sq.splitting_count == 2);
  CHECK(sq.vertex_count == 4);
  const auto seg = proj_lower_bounds(unit_cube(1));
  CHECK(seg.n_P == 1);
  CHECK(seg.vertex_count == 2);
  CHECK_THROWS_AS(proj_lower_bounds(LatticePolytope::from_points(2, test::vecs({{0, 0}, {1, 1}}))), HypothesisError);

  // simple polytopes: the KH_0 multiplicity of the normal fan equals #max = #vert
  for (const auto& P : {standard_simplex(2), unit_cube(2), unit_cube(3), standard_simplex(3)}) {
    const auto T = kh_table(normal_fan(P), 0);
    CHECK(T.rows[0].total() == P.vertices().size());
    CHECK(T.rows[0].total() >= proj_lower_bounds(P).splitting_count);
  }
}
