#pragma once

#include "symcheck/lie.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symcheck {

// ---------------------------------------------------------------------------
// Classical algebra builders. All bases are integer matrices; basis order is
// fixed so that every downstream computation is reproducible.
// ---------------------------------------------------------------------------

namespace detail {
inline Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m.at(i, j) = Scalar(1);
  return m;
}
}  // namespace detail

/// sl(n): off-diagonal units E_ij (row-major), then H_i = E_ii - E_{i+1,i+1}.
inline LieAlgebra build_sl(std::size_t n) {
  if (n < 2 || n > 4) throw ParseError("build_sl: unsupported size");
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) basis.push_back(detail::unit_matrix(n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix h(n, n);
    h.at(i, i) = Scalar(1);
    h.at(i + 1, i + 1) = Scalar(-1);
    basis.push_back(std::move(h));
  }
  return LieAlgebra::from_realization(std::move(basis));
}

/// so(n): antisymmetric units E_ij - E_ji, i < j row-major.
inline LieAlgebra build_so(std::size_t n) {
  if (n < 3 || n > 4) throw ParseError("build_so: unsupported size");
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      basis.push_back(detail::unit_matrix(n, i, j) - detail::unit_matrix(n, j, i));
  return LieAlgebra::from_realization(std::move(basis));
}

/// sp(2n) with respect to the standard symplectic form: blocks
/// [[A, B], [C, -A^T]] with B, C symmetric.
inline LieAlgebra build_sp(std::size_t two_n) {
  if (two_n != 2 && two_n != 4) throw ParseError("build_sp: unsupported size");
  std::size_t n = two_n / 2;
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      basis.push_back(detail::unit_matrix(two_n, i, j) -
                      detail::unit_matrix(two_n, n + j, n + i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix b = detail::unit_matrix(two_n, i, n + j);
      if (i != j) b = b + detail::unit_matrix(two_n, j, n + i);
      basis.push_back(std::move(b));
      Matrix c = detail::unit_matrix(two_n, n + i, j);
      if (i != j) c = c + detail::unit_matrix(two_n, n + j, i);
      basis.push_back(std::move(c));
    }
  return LieAlgebra::from_realization(std::move(basis));
}

/// Direct sum with block-diagonal realization; first summand's basis first.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (!a.has_realization() || !b.has_realization())
    throw InternalError("direct_sum needs realizations");
  std::size_t na = a.realization().size;
  std::size_t nb = b.realization().size;
  std::vector<Matrix> basis;
  for (const Matrix& m : a.realization().basis_mats) {
    Matrix big(na + nb, na + nb);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) big.at(i, j) = m.at(i, j);
    basis.push_back(std::move(big));
  }
  for (const Matrix& m : b.realization().basis_mats) {
    Matrix big(na + nb, na + nb);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) big.at(na + i, na + j) = m.at(i, j);
    basis.push_back(std::move(big));
  }
  return LieAlgebra::from_realization(std::move(basis));
}

// ---------------------------------------------------------------------------
// Involutions, as matrices acting on algebra coordinates.
// ---------------------------------------------------------------------------

inline Matrix involution_from_matrix_map(
    const LieAlgebra& L, const std::function<Matrix(const Matrix&)>& f) {
  Matrix theta(L.dim(), L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) {
    auto c = L.coords_of_matrix(f(L.realization().basis_mats[j]));
    if (!c) throw InternalError("involution does not preserve the algebra");
    for (std::size_t i = 0; i < L.dim(); ++i) theta.at(i, j) = (*c)[i];
  }
  return theta;
}

/// X -> -X^T.
inline Matrix theta_negtranspose(const LieAlgebra& L) {
  return involution_from_matrix_map(L, [](const Matrix& x) { return -x.transpose(); });
}

/// X -> D X D with D = diag(I_k, -I_{n-k}).
inline Matrix theta_adjoint_block(const LieAlgebra& L, std::size_t k) {
  std::size_t n = L.realization().size;
  if (k == 0 || k >= n) throw ParseError("theta_adjoint_block: bad block size");
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d.at(i, i) = Scalar(i < k ? 1 : -1);
  return involution_from_matrix_map(L, [&](const Matrix& x) { return d * x * d; });
}

/// Factor swap on a direct sum whose basis lists the first factor, then the
/// second, each of dimension half.
inline Matrix theta_swap(const LieAlgebra& L, std::size_t half) {
  if (L.dim() != 2 * half) throw InternalError("theta_swap: dimension mismatch");
  Matrix theta(L.dim(), L.dim());
  for (std::size_t i = 0; i < half; ++i) {
    theta.at(i, half + i) = Scalar(1);
    theta.at(half + i, i) = Scalar(1);
  }
  return theta;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct ExpectedFlags {
  bool principal = false;
  bool minus1 = false;
  bool noticed = false;
  bool even = false;
  std::size_t orbit_dim = 0;
};

struct Representative {
  std::string label;
  Element element;
  ExpectedFlags expected;
};

/// Declared real basis: rows are the coordinates of a real basis of g_R over
/// the algebra basis. sigma is coordinatewise conjugation in this basis.
struct RealFormData {
  Matrix basis;
};

struct CatalogEntry {
  std::string id;
  std::shared_ptr<const LieAlgebra> algebra;
  Matrix theta;
  std::vector<Element> cartan_basis;
  std::vector<Representative> representatives;
  std::optional<RealFormData> real_form;

  const LieAlgebra& alg() const { return *algebra; }
};

inline Element apply_involution(const CatalogEntry& entry, const Element& x) {
  return Element(entry.alg(), entry.theta.mul_vec(x.coords));
}

namespace detail {

inline void verify_entry(const CatalogEntry& entry) {
  const LieAlgebra& L = entry.alg();
  auto fail = [&](const std::string& what) {
    throw InternalError("catalog entry " + entry.id + ": " + what);
  };
  std::vector<std::string> diags = verify_structure(L);
  if (!diags.empty()) fail(diags.front());
  if (entry.theta * entry.theta != Matrix::identity(L.dim()))
    fail("theta is not an involution");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Element bi = Element::basis(L, i);
      Element bj = Element::basis(L, j);
      Element lhs = apply_involution(entry, bracket(bi, bj));
      Element rhs = bracket(apply_involution(entry, bi), apply_involution(entry, bj));
      if (lhs != rhs) fail("theta is not an automorphism");
    }
  Matrix theta_plus = entry.theta + Matrix::identity(L.dim());
  Subspace p = kernel(theta_plus);
  for (const Representative& rep : entry.representatives) {
    if (!p.contains(rep.element.coords)) fail("representative not in p");
    if (!is_nilpotent_element(rep.element)) fail("representative not nilpotent");
  }
  for (std::size_t i = 0; i < entry.cartan_basis.size(); ++i) {
    const Element& a = entry.cartan_basis[i];
    if (!p.contains(a.coords)) fail("cartan basis element not in p");
    if (!is_semisimple_element(a)) fail("cartan basis element not semisimple");
    for (std::size_t j = i + 1; j < entry.cartan_basis.size(); ++j)
      if (!bracket(a, entry.cartan_basis[j]).is_zero())
        fail("cartan basis does not commute");
  }
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto S = [](int v) { return Scalar(v); };
  auto I = [](int v) { return Scalar{Rational(0), Rational(v)}; };
  Scalar half = rational_scalar(1, 2);

  // sl2-AI: sl(2) with X -> -X^T; k = so(2), p = symmetric traceless.
  {
    CatalogEntry e;
    e.id = "sl2-AI";
    e.algebra = std::make_shared<LieAlgebra>(build_sl(2));
    const LieAlgebra& L = *e.algebra;
    e.theta = theta_negtranspose(L);
    // basis order: E12, E21, H1
    e.cartan_basis = {Element(L, {S(1), S(1), S(0)})};
    Element principal(L, {half, half, half * I(1)});
    e.representatives = {{"principal", principal, {true, true, true, true, 1}}};
    e.real_form = RealFormData{Matrix::identity(3)};
    entries.push_back(std::move(e));
  }

  // sl2xsl2-diag: the factor-swap pair on sl(2) + sl(2); no real form ships.
  {
    CatalogEntry e;
    e.id = "sl2xsl2-diag";
    LieAlgebra sl2 = build_sl(2);
    e.algebra = std::make_shared<LieAlgebra>(direct_sum(sl2, sl2));
    const LieAlgebra& L = *e.algebra;
    e.theta = theta_swap(L, 3);
    e.cartan_basis = {Element(L, {S(0), S(0), S(1), S(0), S(0), S(-1)})};
    Element principal(L, {S(1), S(0), S(0), S(-1), S(0), S(0)});
    e.representatives = {{"principal", principal, {true, true, true, true, 2}}};
    entries.push_back(std::move(e));
  }

  // sl3-AI: sl(3) with X -> -X^T; rank-2 split pair with an A2 restricted
  // system. Carries both the principal representative and the subregular
  // one, which separates noticed from the centralizer criterion.
  {
    CatalogEntry e;
    e.id = "sl3-AI";
    e.algebra = std::make_shared<LieAlgebra>(build_sl(3));
    const LieAlgebra& L = *e.algebra;
    e.theta = theta_negtranspose(L);
    // basis order: E12, E13, E21, E23, E31, E32, H1, H2
    // Cartan basis ordered so the fixed positivity functional selects the
    // consecutive-difference simple system.
    e.cartan_basis = {Element(L, {S(0), S(0), S(0), S(0), S(0), S(0), S(0), S(1)}),
                      Element(L, {S(0), S(0), S(0), S(0), S(0), S(0), S(1), S(1)})};
    Element principal(L, {S(0), S(1), S(0), I(1), S(1), I(1), S(0), S(0)});
    Element subregular(L, {I(1), S(0), I(1), S(0), S(0), S(0), S(1), S(0)});
    e.representatives = {{"principal", principal, {true, true, true, true, 3}},
                         {"subregular", subregular, {false, false, true, false, 2}}};
    e.real_form = RealFormData{Matrix::identity(8)};
    entries.push_back(std::move(e));
  }

  // sl2-AIII: sl(2) with X -> DXD, D = diag(1,-1); k is the diagonal torus.
  // The compatible real form is the su(1,1)-type basis, not the entrywise
  // real matrices.
  {
    CatalogEntry e;
    e.id = "sl2-AIII";
    e.algebra = std::make_shared<LieAlgebra>(build_sl(2));
    const LieAlgebra& L = *e.algebra;
    e.theta = theta_adjoint_block(L, 1);
    e.cartan_basis = {Element(L, {S(1), S(1), S(0)})};
    Element principal(L, {S(1), S(0), S(0)});
    e.representatives = {{"principal", principal, {true, true, true, true, 1}}};
    Matrix rb(3, 3);
    rb.set_row(0, {S(0), S(0), I(1)});   // i h
    rb.set_row(1, {S(1), S(1), S(0)});   // e + f
    rb.set_row(2, {I(1), I(-1), S(0)});  // i(e - f)
    e.real_form = RealFormData{std::move(rb)};
    entries.push_back(std::move(e));
  }

  // sl3-AIII12: sl(3) with D = diag(1,-1,-1); non-reduced BC1 restricted
  // system. Real form of su(1,2) type with rational structure constants.
  {
    CatalogEntry e;
    e.id = "sl3-AIII12";
    e.algebra = std::make_shared<LieAlgebra>(build_sl(3));
    const LieAlgebra& L = *e.algebra;
    e.theta = theta_adjoint_block(L, 1);
    e.cartan_basis = {Element(L, {S(1), S(0), S(1), S(0), S(0), S(0), S(0), S(0)})};
    Element principal(L, {S(1), S(0), S(0), S(0), S(1), S(0), S(0), S(0)});
    e.representatives = {{"principal", principal, {true, true, true, true, 3}}};
    Matrix rb(8, 8);
    rb.set_row(0, {S(0), S(0), S(0), S(0), S(0), S(0), I(2), I(1)});   // i(2H1+H2)
    rb.set_row(1, {S(0), S(0), S(0), S(0), S(0), S(0), S(0), I(1)});   // i H2
    rb.set_row(2, {S(0), S(0), S(0), S(1), S(0), S(-1), S(0), S(0)});  // E23-E32
    rb.set_row(3, {S(0), S(0), S(0), I(1), S(0), I(1), S(0), S(0)});   // i(E23+E32)
    rb.set_row(4, {S(1), S(0), S(1), S(0), S(0), S(0), S(0), S(0)});   // E12+E21
    rb.set_row(5, {I(1), S(0), I(-1), S(0), S(0), S(0), S(0), S(0)});  // i(E12-E21)
    rb.set_row(6, {S(0), S(1), S(0), S(0), S(1), S(0), S(0), S(0)});   // E13+E31
    rb.set_row(7, {S(0), I(1), S(0), S(0), I(-1), S(0), S(0), S(0)});  // i(E13-E31)
    e.real_form = RealFormData{std::move(rb)};
    entries.push_back(std::move(e));
  }

  for (const CatalogEntry& e : entries) detail::verify_entry(e);
  return entries;
}

}  // namespace detail

/// The built-in verification fixtures. Constructed once; every entry is
/// re-verified at load (structure diagnostics, involution checks, stored
/// representatives and Cartan bases).
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return e;
  throw ParseError("unknown pair id \"" + id + "\"");
}

inline std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const CatalogEntry& e : catalog()) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace symcheck
