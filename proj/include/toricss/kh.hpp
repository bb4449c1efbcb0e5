// Symbolic rational homotopy K-theory ranks of toric schemes,
// KH_n(V)_Q = sum_q K_q(R)_Q^{m_{n,q}}, assembled from the E2 page, and the
// lower bounds for Proj of a lattice polytope.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "toricss/spectral.hpp"

namespace toricss {

enum class FanClass { ProjectiveSimplicial, CompleteSimplicial, QuasiProjective, Other };

/// "projective-simplicial", "complete-simplicial", "quasi-projective", "other".
std::string to_string(FanClass c);

struct Regime {
  FanClass fan_class = FanClass::Other;
  bool conjectural = false;       // complete simplicial without a projectivity certificate
  std::string weight_provenance;  // "deligne" for complete fans, "n-weight" otherwise
  std::string certificate;        // how quasi-projectivity was certified, if it was
};
Regime classify_regime(const Fan& F);

struct KRankRow {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> terms;  // (q, m_{n,q}), m > 0, increasing q

  std::size_t total() const;
  bool operator==(const KRankRow& o) const { return n == o.n && terms == o.terms; }
};

struct KRankTable {
  Regime regime;
  std::vector<KRankRow> rows;
};

/// Cell (P,a) of E2 contributes its rational dimension to q = n + P - a when q >= 0.
KRankRow kh_ranks(const SpectralPage& E2, std::size_t n);

/// Same row through the weight-graded pieces: m_{n,q} = sum_p dim gr^W_{2(p+n-q)} H^{2p+n-q}.
KRankRow kh_ranks_by_weights(const SpectralPage& E2, std::size_t n);

/**
 * Same row from the K-theoretic first page: the block Lambda^{q'-j} (x) K_j(R)
 * of cell (p, q' = n + p) is replaced by its row-wise cohomology
 * E2^{p, q'-j}. Throws InternalError when a symbolic multiplicity disagrees
 * with the rank of the E1 cell it stands for.
 */
KRankRow kh_ranks_symbolic(const Nerve& N, const BigradedComplex& E1, const SpectralPage& E2, std::size_t n);

/// Rows n = 0 .. max_n. HypothesisError("quasi-projective") for fans of class Other.
KRankTable kh_table(const Fan& F, std::size_t max_n);

struct CorollaryCReport {
  Regime regime;
  bool certified = false;  // projective and simplicial; otherwise the result is informational
  std::size_t m = 0;       // number of maximal cones
  std::vector<KRankRow> rows;
  std::vector<std::size_t> failing;  // degrees n whose row is not {(n, m)}
  bool pass() const { return certified && failing.empty(); }
};
CorollaryCReport check_corollary_c(const Fan& F, std::size_t n_min, std::size_t n_max);

struct ProjLowerBounds {
  std::size_t n_P = 0;  // least n >= 0 with an interior lattice point in (n+1)P
  std::size_t splitting_count = 0;  // n_P + 1
  std::size_t vertex_count = 0;
};
/// HypothesisError("full-dimensional") unless P spans its ambient space.
ProjLowerBounds proj_lower_bounds(const LatticePolytope& P);

}  // namespace toricss
