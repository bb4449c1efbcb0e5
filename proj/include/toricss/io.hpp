// JSON encoding of inputs and reports. Lattice integers are written as
// decimal strings so that no value is ever squeezed through a double; counts
// (ranks, indices, multiplicities) are plain JSON numbers. Readers accept
// integers either way.
#pragma once

#include <string>

#include "json.hpp"
#include "toricss/kh.hpp"
#include "toricss/monoid.hpp"

namespace toricss::io {

using nlohmann::json;

/// Throws SchemaError naming the offending JSON path.
Integer integer_from_json(const json& j, const std::string& path);
Vector vector_from_json(const json& j, const std::string& path, std::size_t expected_size);
json to_json(const Integer& x);
json to_json(const Vector& v);
json to_json(const std::vector<Vector>& vs);

/**
 * {"type": "fan", "dim": d, "max_cones": [[ray, ...], ...]} or the indexed
 * form {"type": "fan", "dim": d, "rays": [...], "cones": [[i, ...], ...]}.
 * The writer uses the first form, sorted canonically, plus provenance and hash.
 */
Fan fan_from_json(const json& j);
json to_json(const Fan& F);

/// {"type": "polytope", "dim": d, "points": [...]}
LatticePolytope polytope_from_json(const json& j);
json to_json(const LatticePolytope& P);

/// {"type": "monoid", "rank": r, "generators": [...]}
AffineMonoid monoid_from_json(const json& j);
json to_json(const AffineMonoid& M);

/// Parses text, reporting syntax errors as SchemaError.
json parse(const std::string& text);

json to_json(const AbelianGroupStructure& g);
/// {"E2": [[p, q, free_rank, [torsion...]], ...]} with every cell in (q, p) order.
json to_json(const SpectralPage& E2);
json to_json(const BettiNumbers& B);
json to_json(const PurityReport& R);
json to_json(const FrobeniusReport& R);
json to_json(const TorsionBound& T);
json to_json(const Regime& R);
/// {"n": n, "terms": [{"q": q, "mult": m}, ...]}
json to_json(const KRankRow& row);
json to_json(const KRankTable& T);
json to_json(const CorollaryCReport& R);
json to_json(const ProjLowerBounds& B);
json to_json(const GapModule& G);
json to_json(const ConductorCertificate& C);
json to_json(const FrobeniusOnGap& F);
json to_json(const NilpotenceWitness& W);
json to_json(const ConjectureK0Report& R);

}  // namespace toricss::io
