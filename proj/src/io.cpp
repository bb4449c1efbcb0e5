#include "toricss/io.hpp"

#include "toricss/errors.hpp"

namespace toricss::io {

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t count_from_json(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError(path + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array");
  return j;
}

void check_type(const json& j, const char* type) {
  if (!j.is_object()) throw SchemaError("$: expected an object");
  if (auto it = j.find("type"); it != j.end() && *it != type)
    throw SchemaError("$.type: expected \"" + std::string(type) + "\"");
}

std::vector<Vector> vectors_from_json(const json& j, const std::string& path, std::size_t size) {
  std::vector<Vector> out;
  const json& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(vector_from_json(a[i], path + "[" + std::to_string(i) + "]", size));
  return out;
}

json pairs_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& v) {
  json a = json::array();
  for (const auto& [x, y] : v) a.push_back({x, y});
  return a;
}

}  // namespace

Integer integer_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(path + ": not a decimal integer");
    return x;
  }
  throw SchemaError(path + ": expected an integer (number or decimal string)");
}

Vector vector_from_json(const json& j, const std::string& path, std::size_t expected_size) {
  const json& a = array_at(j, path);
  if (a.size() != expected_size)
    throw SchemaError(path + ": expected " + std::to_string(expected_size) + " coordinates, got " +
                      std::to_string(a.size()));
  Vector v;
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(integer_from_json(a[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

json to_json(const Integer& x) { return x.get_str(); }

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const std::vector<Vector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Fan fan_from_json(const json& j) {
  check_type(j, "fan");
  const std::size_t dim = count_from_json(field(j, "dim", "$"), "$.dim");
  std::vector<Cone> cones;
  std::string provenance;
  if (auto p = j.find("provenance"); p != j.end() && p->is_string()) provenance = p->get<std::string>();
  if (j.contains("max_cones")) {
    const json& mc = array_at(j.at("max_cones"), "$.max_cones");
    for (std::size_t i = 0; i < mc.size(); ++i)
      cones.push_back(Cone::from_generators(dim, vectors_from_json(mc[i], "$.max_cones[" + std::to_string(i) + "]", dim)));
  } else if (j.contains("rays")) {
    const auto rays = vectors_from_json(j.at("rays"), "$.rays", dim);
    const json& cs = array_at(field(j, "cones", "$"), "$.cones");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string path = "$.cones[" + std::to_string(i) + "]";
      std::vector<Vector> gens;
      for (std::size_t k = 0; k < array_at(cs[i], path).size(); ++k) {
        const std::size_t r = count_from_json(cs[i][k], path + "[" + std::to_string(k) + "]");
        if (r >= rays.size()) throw SchemaError(path + ": ray index " + std::to_string(r) + " out of range");
        gens.push_back(rays[r]);
      }
      cones.push_back(Cone::from_generators(dim, gens));
    }
  } else {
    throw SchemaError("$: a fan needs \"max_cones\" or \"rays\" with \"cones\"");
  }
  return Fan::from_max_cones(dim, std::move(cones), provenance);
}

json to_json(const Fan& F) {
  json mc = json::array();
  for (const auto& c : F.max_cones()) mc.push_back(to_json(c.rays()));
  json out = {{"type", "fan"}, {"dim", F.dim()}, {"max_cones", mc}, {"hash", F.canonical_hash()}};
  if (!F.provenance().empty()) out["provenance"] = F.provenance();
  return out;
}

LatticePolytope polytope_from_json(const json& j) {
  check_type(j, "polytope");
  const std::size_t dim = count_from_json(field(j, "dim", "$"), "$.dim");
  return LatticePolytope::from_points(dim, vectors_from_json(field(j, "points", "$"), "$.points", dim));
}

json to_json(const LatticePolytope& P) {
  return {{"type", "polytope"}, {"dim", P.dim()}, {"points", to_json(P.vertices())}};
}

AffineMonoid monoid_from_json(const json& j) {
  check_type(j, "monoid");
  const std::size_t rank = count_from_json(field(j, "rank", "$"), "$.rank");
  return AffineMonoid(rank, vectors_from_json(field(j, "generators", "$"), "$.generators", rank));
}

json to_json(const AffineMonoid& M) {
  return {{"type", "monoid"}, {"rank", M.rank()}, {"generators", to_json(M.generators())}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const AbelianGroupStructure& g) {
  json t = json::array();
  for (const auto& d : g.invariant_factors) t.push_back(to_json(d));
  return {{"free_rank", g.free_rank}, {"torsion", t}};
}

json to_json(const SpectralPage& E2) {
  json cells = json::array();
  for (std::size_t q = 0; q <= E2.max_q; ++q)
    for (std::size_t p = 0; p <= E2.max_p; ++p) {
      const auto& c = E2.cell(p, q);
      json t = json::array();
      for (const auto& d : c.invariant_factors) t.push_back(to_json(d));
      cells.push_back({p, q, c.free_rank, t});
    }
  json diag = json::array();
  for (std::size_t m = 0; m <= E2.total_degree(); ++m) diag.push_back(E2.anti_diagonal(m));
  // integral anti-diagonal sums are not claimed to be H^*(V, Z)
  return {{"E2", cells}, {"anti_diagonals", diag}, {"integral_abutment", "unverified"}};
}

json to_json(const BettiNumbers& B) {
  json b = json::array();
  for (const auto& x : B.even) b.push_back(to_json(x));
  return {{"betti", b}, {"sum", to_json(B.sum)}, {"max_cones", B.max_cones}, {"sum_rule", B.sum_rule}};
}

json to_json(const PurityReport& R) { return {{"purity", R.pass}, {"offending", pairs_to_json(R.offending)}}; }

json to_json(const FrobeniusReport& R) {
  json s = json::array();
  for (const auto& x : R.row_scalars) s.push_back(to_json(x));
  return {{"c", to_json(R.c)},
          {"row_scalars", s},
          {"checks", {{"commutes_with_d1", R.commutes_with_d1}, {"row_eigenvalues", R.row_eigenvalues}}}};
}

json to_json(const TorsionBound& T) {
  return {{"r", T.r},
          {"gcd", T.description},
          {"bound", to_json(T.bound)},
          {"empirical_gcd", to_json(T.empirical_gcd)},
          {"checks",
           {{"gcd_divides_bound", T.gcd_divides_bound}, {"odd_part", T.odd_part_ok}, {"two_part", T.two_part_ok}}}};
}

json to_json(const Regime& R) {
  json out = {{"regime", R.conjectural ? "conjectural regime" : to_string(R.fan_class)},
              {"fan_class", to_string(R.fan_class)},
              {"weights", R.weight_provenance}};
  if (!R.certificate.empty()) out["certificate"] = R.certificate;
  return out;
}

json to_json(const KRankRow& row) {
  json terms = json::array();
  for (const auto& [q, m] : row.terms) terms.push_back({{"q", q}, {"mult", m}});
  return {{"n", row.n}, {"terms", terms}};
}

json to_json(const KRankTable& T) {
  json rows = json::array();
  for (const auto& r : T.rows) {
    json x = to_json(r);
    x["regime"] = T.regime.conjectural ? "conjectural regime" : to_string(T.regime.fan_class);
    rows.push_back(x);
  }
  json out = to_json(T.regime);
  out["rows"] = rows;
  return out;
}

json to_json(const CorollaryCReport& R) {
  json rows = json::array();
  for (const auto& r : R.rows) rows.push_back(to_json(r));
  json out = to_json(R.regime);
  out["certified"] = R.certified;
  out["m"] = R.m;
  out["rows"] = rows;
  out["failing"] = R.failing;
  out["pass"] = R.pass();
  return out;
}

json to_json(const ProjLowerBounds& B) {
  return {{"n_P", B.n_P}, {"splitting_count", B.splitting_count}, {"vertex_count", B.vertex_count}};
}

json to_json(const GapModule& G) {
  return {{"elements", to_json(G.elements)},
          {"bound", to_json(G.bound)},
          {"truncated", G.truncated},
          {"parallelepiped_degree", to_json(G.parallelepiped_degree)},
          {"window", to_json(G.window)}};
}

json to_json(const ConductorCertificate& C) {
  json out = {{"face", to_json(C.face.rays())}, {"found", C.found}, {"search_degree", to_json(C.search_degree)}};
  if (C.found) {
    out["element"] = to_json(C.element);
    out["degree"] = to_json(C.degree);
    out["avoids_gap"] = C.avoids_gap;
  }
  out["module_generators"] = to_json(C.module_generators);
  return out;
}

json to_json(const FrobeniusOnGap& F) {
  json images = json::array();
  for (const auto& im : F.images)
    images.push_back({{"source", to_json(im.source)}, {"target", im.target ? to_json(*im.target) : json(nullptr)}});
  return {{"c", to_json(F.c)}, {"images", images}, {"support_law", F.support_law}, {"is_zero", F.is_zero}};
}

json to_json(const NilpotenceWitness& W) {
  json stable = json::array();
  for (const auto& [x, c] : W.stable_from) stable.push_back({{"x", to_json(x)}, {"c", c ? to_json(*c) : json(nullptr)}});
  return {{"c0", W.c0 ? to_json(*W.c0) : json(nullptr)},
          {"kills_every_c_at_least_2", W.kills_every_c_at_least_2},
          {"stable_from", stable}};
}

json to_json(const ConjectureK0Report& R) {
  json conductors = json::array();
  for (const auto& c : R.conductors) conductors.push_back(to_json(c));
  json frob = json::array();
  for (const auto& f : R.frobenius) frob.push_back(to_json(f));
  json clauses = json::array();
  for (const auto& c : R.clauses)
    clauses.push_back({{"clause", c.clause}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
  return {{"gap", to_json(R.gap)},
          {"gap_finite_known", R.gap_finite_known},
          {"conductors", conductors},
          {"frobenius", frob},
          {"nilpotence", to_json(R.nilpotence)},
          {"module_generators", to_json(R.module_generators)},
          {"clauses", clauses},
          {"pass", R.passed()}};
}

}  // namespace toricss::io
