#pragma once

#include "symcheck/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

// Shared fixtures for the unit suites.

inline symcheck::Scalar q(const std::string& s) { return symcheck::parse_scalar(s); }

inline symcheck::Matrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<symcheck::Scalar>> out;
  for (const auto& row : rows) {
    std::vector<symcheck::Scalar> r;
    for (const auto& s : row) r.push_back(q(s));
    out.push_back(std::move(r));
  }
  return symcheck::Matrix::from_rows(out);
}

inline symcheck::Element elem(const symcheck::LieAlgebra& L,
                              const std::vector<std::vector<std::string>>& rows) {
  return symcheck::element_from_matrix(L, mat(rows));
}

inline symcheck::Matrix mat_of(const symcheck::Element& e) {
  return e.alg->matrix_of_coords(e.coords);
}

/// Structure analysis is the expensive part of every suite; cache it per id.
inline const symcheck::PairContext& ctx_for(const std::string& id) {
  static std::map<std::string, symcheck::PairContext> cache;
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, symcheck::analyze_structure(symcheck::catalog_entry(id)))
             .first;
  return it->second;
}

inline symcheck::Element random_element_of(const symcheck::LieAlgebra& L,
                                           const symcheck::Subspace& s,
                                           symcheck::Rng& rng) {
  symcheck::Element x = symcheck::Element::zero(L);
  for (std::size_t j = 0; j < s.dim(); ++j)
    x = x + rng.small_int() * symcheck::Element(L, s.basis_row(j));
  return x;
}
