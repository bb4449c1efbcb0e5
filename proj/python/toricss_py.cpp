// Python bindings. Structured values cross the boundary as JSON text; the
// package __init__ turns them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricss/errors.hpp"
#include "toricss/io.hpp"

namespace py = pybind11;
using namespace toricss;
using io::json;

namespace {

Fan fan_of(const std::string& s) { return io::fan_from_json(io::parse(s)); }
AffineMonoid monoid_of(const std::string& s) { return io::monoid_from_json(io::parse(s)); }
LatticePolytope polytope_of(const std::string& s) { return io::polytope_from_json(io::parse(s)); }

IntegerMatrix matrix_of(const std::vector<std::vector<std::string>>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw SchemaError("matrix rows have different lengths");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Integer(rows[i][j]);
  }
  return m;
}

json matrix_json(const IntegerMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(io::to_json(m.row(i)));
  return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact toric spectral sequences and affine monoids";

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<InvalidFanError>(m, "InvalidFanError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);

  m.def("catalog", [](const std::string& expr) { return io::to_json(catalog::from_expression(expr)).dump(); });
  m.def("fan_info", [](const std::string& f) {
    const Fan F = fan_of(f);
    json j = io::to_json(classify_regime(F));
    j.update({{"complete", is_complete(F)}, {"simplicial", is_simplicial(F)}, {"smooth", is_smooth(F)},
              {"projective", is_projective(F)}, {"hash", F.canonical_hash()}});
    return j.dump();
  });
  m.def("e2", [](const std::string& f) { return io::to_json(page2(build_E1(fan_of(f)))).dump(); });
  m.def("betti", [](const std::string& f) { return io::to_json(betti_formula(fan_of(f))).dump(); });
  m.def("purity", [](const std::string& f) {
    const Fan F = fan_of(f);
    return io::to_json(purity_check(F, page2(build_E1(F)))).dump();
  });
  m.def("frobenius", [](const std::string& f, long c) {
    return io::to_json(frobenius_on_E1(build_E1(fan_of(f)), c)).dump();
  });
  m.def("kh_table", [](const std::string& f, std::size_t n) { return io::to_json(kh_table(fan_of(f), n)).dump(); });
  m.def("check_corollary_c", [](const std::string& f, std::size_t n) {
    return io::to_json(check_corollary_c(fan_of(f), 0, n)).dump();
  });
  m.def("torsion_bound", [](std::size_t r) { return io::to_json(torsion_bound(r)).dump(); });

  m.def("normal_fan", [](const std::string& p) { return io::to_json(normal_fan(polytope_of(p))).dump(); });
  m.def("proj_lower_bounds", [](const std::string& p) { return io::to_json(proj_lower_bounds(polytope_of(p))).dump(); });

  m.def("normalization", [](const std::string& s) { return io::to_json(normalization(monoid_of(s))).dump(); });
  m.def("seminormalization", [](const std::string& s) { return io::to_json(seminormalization(monoid_of(s))).dump(); });
  m.def("gap", [](const std::string& s, long bound) { return io::to_json(gap(monoid_of(s), bound)).dump(); });
  m.def("conjecture_k0", [](const std::string& s, long bound) {
    return io::to_json(verify_conjecture_k0(monoid_of(s), bound)).dump();
  });

  m.def("smith_normal_form", [](const std::vector<std::vector<std::string>>& rows, std::size_t cols) {
    const auto s = smith_normal_form(matrix_of(rows, cols));
    return json{{"D", matrix_json(s.D)}, {"U", matrix_json(s.U)}, {"V", matrix_json(s.V)}}.dump();
  });
}
