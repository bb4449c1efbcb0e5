#include "toricss/kh.hpp"

#include <map>

#include "toricss/errors.hpp"

namespace toricss {

std::string to_string(FanClass c) {
  switch (c) {
    case FanClass::ProjectiveSimplicial: return "projective-simplicial";
    case FanClass::CompleteSimplicial: return "complete-simplicial";
    case FanClass::QuasiProjective: return "quasi-projective";
    case FanClass::Other: return "other";
  }
  return "other";
}

Regime classify_regime(const Fan& F) {
  Regime R;
  const bool complete = is_complete(F);
  const bool simplicial = is_simplicial(F);
  R.weight_provenance = complete ? "deligne" : "n-weight";
  if (complete && simplicial && is_projective(F)) {
    R.fan_class = FanClass::ProjectiveSimplicial;
    R.certificate = "projective";
    return R;
  }
  const auto cert = certify_quasi_projective(F);
  if (cert.certified) {
    R.fan_class = FanClass::QuasiProjective;
    R.certificate = cert.witness;
    return R;
  }
  if (complete && simplicial) {
    R.fan_class = FanClass::CompleteSimplicial;
    R.conjectural = true;
    return R;
  }
  R.fan_class = FanClass::Other;
  return R;
}

std::size_t KRankRow::total() const {
  std::size_t s = 0;
  for (const auto& t : terms) s += t.second;
  return s;
}

namespace {

KRankRow to_row(std::size_t n, const std::map<std::size_t, std::size_t>& mult) {
  KRankRow row;
  row.n = n;
  for (const auto& [q, m] : mult)
    if (m > 0) row.terms.emplace_back(q, m);
  return row;
}

}  // namespace

KRankRow kh_ranks(const SpectralPage& E2, std::size_t n) {
  std::map<std::size_t, std::size_t> mult;
  for (std::size_t P = 0; P <= E2.max_p; ++P)
    for (std::size_t a = 0; a <= E2.max_q; ++a)
      if (n + P >= a) mult[n + P - a] += E2.rational_dim(P, a);
  return to_row(n, mult);
}

KRankRow kh_ranks_by_weights(const SpectralPage& E2, std::size_t n) {
  std::map<std::size_t, std::size_t> mult;
  for (std::size_t q = 0; q <= n + E2.max_p; ++q)
    for (std::size_t p = 0; p <= E2.max_p; ++p) {
      if (p + n < q) continue;
      const std::size_t w = p + n - q;  // weight 2w in H^{2p+n-q}
      const std::size_t degree = 2 * p + n - q;
      for (const auto& [weight, dim] : weight_graded_pieces(E2, degree))
        if (weight == 2 * w) mult[q] += dim;
    }
  return to_row(n, mult);
}

KRankRow kh_ranks_symbolic(const Nerve& N, const BigradedComplex& E1, const SpectralPage& E2, std::size_t n) {
  const auto symbolic = kh_E1_symbolic(N, n + E1.max_p);
  std::map<std::size_t, std::size_t> mult;
  for (std::size_t p = 0; p <= E1.max_p; ++p) {
    const std::size_t qk = n + p;  // K-theoretic row of total degree n
    for (const auto& [j, m] : symbolic.at({p, qk})) {
      const std::size_t a = qk - j;
      if (m != E1.rank(p, a)) throw InternalError("kh_ranks_symbolic: symbolic multiplicity disagrees with E1");
      if (a <= E2.max_q) mult[j] += E2.rational_dim(p, a);
    }
  }
  return to_row(n, mult);
}

KRankTable kh_table(const Fan& F, std::size_t max_n) {
  KRankTable T;
  T.regime = classify_regime(F);
  if (T.regime.fan_class == FanClass::Other)
    throw HypothesisError("quasi-projective", "kh_table: the fan is neither certified quasi-projective nor complete simplicial");
  const auto E2 = page2(build_E1(F));
  for (std::size_t n = 0; n <= max_n; ++n) T.rows.push_back(kh_ranks(E2, n));
  return T;
}

CorollaryCReport check_corollary_c(const Fan& F, std::size_t n_min, std::size_t n_max) {
  CorollaryCReport R;
  R.regime = classify_regime(F);
  R.certified = R.regime.fan_class == FanClass::ProjectiveSimplicial;
  R.m = F.max_cones().size();
  const auto E2 = page2(build_E1(F));
  for (std::size_t n = n_min; n <= n_max; ++n) {
    KRankRow row = kh_ranks(E2, n);
    KRankRow expected;
    expected.n = n;
    expected.terms = {{n, R.m}};
    if (!(row == expected)) R.failing.push_back(n);
    R.rows.push_back(std::move(row));
  }
  return R;
}

ProjLowerBounds proj_lower_bounds(const LatticePolytope& P) {
  const auto& V = P.vertices();
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < V.size(); ++i) diffs.push_back(V[i] - V[0]);
  if (V.empty() || Lattice::generated_by(P.dim(), diffs).rank() != P.dim())
    throw HypothesisError("full-dimensional", "proj_lower_bounds: the polytope is not full-dimensional");
  ProjLowerBounds B;
  B.vertex_count = V.size();
  for (std::size_t n = 0;; ++n) {
    if (n > P.dim()) throw InternalError("proj_lower_bounds: no interior point in (d+1)P");
    if (!P.interior_points_of_dilation(Integer(n + 1)).empty()) {
      B.n_P = n;
      break;
    }
  }
  B.splitting_count = B.n_P + 1;
  return B;
}

}  // namespace toricss
