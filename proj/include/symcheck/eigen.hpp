#pragma once

#include "symcheck/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcheck {

/// Raised when a matrix required to have Gaussian-integer spectrum has roots
/// outside Z[i]; carries the residual factor of the minimal polynomial.
struct SpectrumError : std::runtime_error {
  explicit SpectrumError(const std::string& residual)
      : std::runtime_error("non-integral spectrum; residual polynomial " + residual) {}
};

struct EigenDecomposition {
  // (eigenvalue, eigenspace), sorted by eigenvalue for determinism.
  std::vector<std::pair<Scalar, Subspace>> spaces;
  bool diagonalizable = false;
};

namespace detail {

inline Integer ceil_isqrt(const Integer& n) {
  if (n <= 0) return 0;
  Integer x = 1;
  while (x * x < n) ++x;
  return x;
}

/// All Gaussian-integer roots of p, each fully deflated; the leftover factor
/// is returned through residual.
inline std::vector<Scalar> gaussian_integer_roots(Poly p, Poly* residual) {
  p = poly_monic(std::move(p));
  std::vector<Scalar> roots;
  if (poly_is_zero(p) || p.size() == 1) {
    if (residual) *residual = p;
    return roots;
  }
  // Cauchy bound: every root satisfies |z| <= 1 + max |c_k| (monic input).
  Rational max_norm(0);
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    Rational nk = p[k].norm();
    if (nk > max_norm) max_norm = nk;
  }
  Integer bound = 1 + ceil_isqrt(numerator(max_norm) / denominator(max_norm) + 1);
  Integer b2 = bound * bound;
  for (Integer a = -bound; a <= bound; ++a) {
    for (Integer b = -bound; b <= bound; ++b) {
      if (a * a + b * b > b2) continue;
      Scalar cand{Rational(a), Rational(b)};
      while (p.size() >= 2 && poly_eval(p, cand).is_zero()) {
        if (roots.empty() || !(roots.back() == cand)) roots.push_back(cand);
        p = poly_deflate(p, cand);
      }
      if (p.size() == 1) break;
    }
    if (p.size() == 1) break;
  }
  if (residual) *residual = p;
  return roots;
}

}  // namespace detail

/// Eigenspace for every Gaussian-integer eigenvalue of m. Throws
/// SpectrumError if the minimal polynomial has non-integral roots, and (when
/// require_semisimple is set) InternalError if the eigenspaces do not fill
/// the ambient space.
inline EigenDecomposition integer_eigenvalues(const Matrix& m,
                                              bool require_semisimple = false) {
  if (!m.is_square()) throw InternalError("integer_eigenvalues of non-square matrix");
  Poly residual;
  std::vector<Scalar> roots = detail::gaussian_integer_roots(min_poly(m), &residual);
  if (!poly_is_zero(residual) && residual.size() > 1)
    throw SpectrumError(format_poly(residual));

  EigenDecomposition out;
  std::sort(roots.begin(), roots.end(), scalar_less);
  std::size_t total = 0;
  for (const Scalar& lambda : roots) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
    Subspace space = kernel(shifted);
    total += space.dim();
    out.spaces.emplace_back(lambda, std::move(space));
  }
  out.diagonalizable = (total == m.rows());
  if (require_semisimple && !out.diagonalizable)
    throw InternalError("matrix with integral spectrum is not semisimple");
  return out;
}

/// Exact determinant by Gaussian elimination.
inline Scalar determinant(Matrix m) {
  if (!m.is_square()) throw InternalError("determinant of non-square matrix");
  Scalar det(1);
  std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m.at(sel, col).is_zero()) ++sel;
    if (sel == n) return Scalar(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Scalar inv = m.at(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

/// Sylvester test: negative definite iff the k-th leading principal minor has
/// sign (-1)^k. Vacuously true for the empty matrix.
inline bool is_negative_definite(const Matrix& gram) {
  if (!gram.is_square()) throw std::invalid_argument("gram matrix not square");
  std::size_t n = gram.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!gram.at(i, j).is_real())
        throw std::invalid_argument("gram matrix has non-real entries");
      if (gram.at(i, j) != gram.at(j, i))
        throw std::invalid_argument("gram matrix not symmetric");
    }
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = gram.at(i, j);
    Rational d = determinant(lead).re;
    bool want_negative = (k % 2 == 1);
    if (want_negative ? d >= 0 : d <= 0) return false;
  }
  return true;
}

inline bool is_positive_definite(const Matrix& gram) {
  Matrix neg = -gram;
  return is_negative_definite(neg);
}

}  // namespace symcheck
