#pragma once

#include "symcheck/matrix.hpp"
#include "symcheck/subspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace symcheck {

/// Dense polynomial over Scalar, ascending coefficients, no trailing zeros.
/// The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline std::size_t poly_degree(const Poly& p) {
  if (p.empty()) throw InternalError("degree of zero polynomial");
  return p.size() - 1;
}

inline Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

inline Matrix poly_eval_matrix(const Poly& p, const Matrix& m) {
  if (!m.is_square()) throw InternalError("polynomial of non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc.at(i, i) += p[k];
  }
  return acc;
}

inline Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Scalar(int(k)) * p[k]);
  return poly_trim(std::move(d));
}

inline Poly poly_monic(Poly p) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  Scalar inv = p.back().inverse();
  for (Scalar& c : p) c = inv * c;
  return p;
}

/// Remainder of a by b (b nonzero).
inline Poly poly_rem(Poly a, const Poly& b) {
  if (poly_is_zero(b)) throw InternalError("polynomial division by zero");
  a = poly_trim(std::move(a));
  Scalar lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    Scalar q = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a = poly_trim(std::move(a));
  }
  return a;
}

/// Quotient of a by (t - root); the division must be exact.
inline Poly poly_deflate(const Poly& p, const Scalar& root) {
  if (p.size() < 2) throw InternalError("deflating a constant");
  Poly q(p.size() - 1);
  Scalar carry = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = p[k] + root * carry;
  }
  if (!carry.is_zero()) throw InternalError("deflation by a non-root");
  return q;
}

inline Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!poly_is_zero(b)) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

inline bool poly_squarefree(const Poly& p) {
  if (poly_is_zero(p) || p.size() == 1) return true;
  Poly g = poly_gcd(p, poly_derivative(p));
  return g.size() == 1;
}

/// True iff p = t^k for some k >= 1.
inline bool poly_is_power_of_t(const Poly& p) {
  if (p.size() < 2) return false;
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    if (!p[k].is_zero()) return false;
  return p.back() == Scalar(1);
}

inline std::string format_poly(const Poly& p) {
  if (poly_is_zero(p)) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = format_scalar(p[k]);
    if (k == 0) {
      out += c;
    } else {
      std::string t = (k == 1) ? "t" : "t^" + std::to_string(k);
      out += (c == "1") ? t : "(" + c + ")*" + t;
    }
  }
  return out;
}

/// Monic minimal polynomial, found as the first linear dependency among
/// flattened powers of m.
inline Poly min_poly(const Matrix& m) {
  if (!m.is_square()) throw InternalError("min_poly of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Poly{Scalar(1)};  // empty matrix: minimal polynomial 1
  std::vector<Matrix> powers;
  powers.push_back(Matrix::identity(n));
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    Matrix krylov(k, n * n);
    for (std::size_t r = 0; r < k; ++r) krylov.set_row(r, powers[r].flatten());
    auto sol = solve_linear(krylov.transpose(), powers[k].flatten());
    if (sol) {
      Poly p(k + 1);
      for (std::size_t r = 0; r < k; ++r) p[r] = -sol->particular[r];
      p[k] = Scalar(1);
      return p;
    }
  }
  throw InternalError("no annihilating polynomial found");
}

}  // namespace symcheck
