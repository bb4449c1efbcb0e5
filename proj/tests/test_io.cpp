#include "catch_amalgamated.hpp"
#include "test_util.hpp"
#include "toricss/errors.hpp"
#include "toricss/io.hpp"

using namespace toricss;
using io::json;

TEST_CASE("fan round trip on canonical forms") {
  const std::vector<Fan> fans = {catalog::projective_space(3), catalog::hirzebruch(2),
                                 catalog::weighted_projective({1, 1, 2}), catalog::torus(2),
                                 catalog::affine_orthant(3),
                                 catalog::product(catalog::projective_space(1), catalog::torus(1))};
  for (const auto& F : fans) {
    const json j = io::to_json(F);
    const Fan G = io::fan_from_json(io::parse(j.dump()));
    CHECK(G.canonical_form() == F.canonical_form());
    CHECK(G.max_cones() == F.max_cones());  // the cone order is kept
    CHECK(io::to_json(G) == j);
  }
}

TEST_CASE("indexed fan form") {
  const json j = io::parse(R"({"type":"fan","dim":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[2,0]]})");
  CHECK(io::fan_from_json(j).canonical_form() == catalog::projective_space(2).canonical_form());
}

TEST_CASE("integers are exact in both directions") {
  const Integer big("123456789012345678901234567890");
  CHECK(io::to_json(big) == "123456789012345678901234567890");
  CHECK(io::integer_from_json(json("123456789012345678901234567890"), "$") == big);
  CHECK(io::integer_from_json(json(-7), "$") == -7);
  CHECK_THROWS_AS(io::integer_from_json(json(1.5), "$"), SchemaError);
  CHECK_THROWS_AS(io::integer_from_json(json("12a"), "$"), SchemaError);
}

TEST_CASE("schema diagnostics name the path") {
  auto message = [](const std::string& text) {
    try {
      io::fan_from_json(io::parse(text));
    } catch (const SchemaError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"type":"fan"})") == "$: missing field \"dim\"");
  CHECK(message(R"({"type":"fan","dim":2,"max_cones":[[[1,0],[0,1,1]]]})") ==
        "$.max_cones[0][1]: expected 2 coordinates, got 3");
  CHECK(message(R"({"type":"fan","dim":2,"rays":[[1,0]],"cones":[[0,3]]})") == "$.cones[0]: ray index 3 out of range");
  CHECK(message(R"({"type":"monoid","dim":2})") == "$.type: expected \"fan\"");
  CHECK(message(R"({"type":"fan","dim":-1})") == "$.dim: expected a nonnegative integer");
  CHECK_THROWS_AS(io::parse("{"), SchemaError);
  CHECK_THROWS_AS(io::fan_from_json(io::parse(R"({"type":"fan","dim":2,"max_cones":[[[1,0],[-1,0]]]})")),
                  InvalidFanError);
}

TEST_CASE("monoids and polytopes") {
  const auto M = io::monoid_from_json(io::parse(R"({"type":"monoid","rank":1,"generators":[[3],["2"]]})"));
  CHECK(M.generators() == test::vecs({{2}, {3}}));
  CHECK(io::monoid_from_json(io::to_json(M)) == M);
  const auto P = io::polytope_from_json(io::parse(R"({"type":"polytope","dim":2,"points":[[0,0],[2,0],[0,2],[1,1]]})"));
  CHECK(P.vertices().size() == 3);
  CHECK(io::polytope_from_json(io::to_json(P)).vertices() == P.vertices());
}

TEST_CASE("report shapes") {
  const auto E2 = page2(build_E1(catalog::projective_space(1)));
  const json j = io::to_json(E2);
  CHECK(j["E2"] == json::parse(R"([[0,0,1,[]],[1,0,0,[]],[0,1,0,[]],[1,1,1,[]]])"));
  CHECK(j["anti_diagonals"] == json::parse("[1,0,1]"));

  const auto T = kh_table(catalog::projective_space(2), 1);
  const json t = io::to_json(T);
  CHECK(t["regime"] == "projective-simplicial");
  CHECK(t["rows"][1] == json::parse(R"({"n":1,"terms":[{"q":1,"mult":3}],"regime":"projective-simplicial"})"));

  const auto K = io::to_json(verify_conjecture_k0(AffineMonoid(1, test::vecs({{2}, {3}})), 10));
  CHECK(K["gap"]["elements"] == json::parse(R"([["1"]])"));
  CHECK(K["pass"] == true);
  CHECK(K["clauses"][0]["verdict"] == "pass");
  CHECK(K["nilpotence"]["c0"] == "2");
}
