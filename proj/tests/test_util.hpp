#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "toricss/cone.hpp"

namespace test {

inline toricss::Vector vec(std::initializer_list<long> xs) {
  toricss::Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<toricss::Vector> vecs(std::initializer_list<std::initializer_list<long>> xss) {
  std::vector<toricss::Vector> out;
  for (const auto& xs : xss) out.push_back(vec(xs));
  return out;
}

inline toricss::Cone cone(std::size_t dim, std::initializer_list<std::initializer_list<long>> gens) {
  return toricss::Cone::from_generators(dim, vecs(gens));
}

inline std::string show(const std::vector<toricss::Vector>& vs) {
  std::string s;
  for (const auto& v : vs) {
    s += "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    s += ")";
  }
  return s;
}

inline bool is_unimodular(const toricss::IntegerMatrix& U) {
  if (U.rows() != U.cols()) return false;
  const auto d = toricss::determinant(U);
  return d == 1 || d == -1;
}

}  // namespace test
