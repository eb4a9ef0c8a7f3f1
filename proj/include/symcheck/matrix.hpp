#pragma once

#include "symcheck/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace symcheck {

/// Dense row-major matrix over the Gaussian rationals. Catalog dimensions are
/// tiny, so no sparsity or blocking anywhere.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InternalError("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const {
    return std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const std::vector<Scalar>& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  bool is_zero() const {
    for (const Scalar& s : a_)
      if (!s.is_zero()) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Matrix conj() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw InternalError("matrix shape mismatch in +");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw InternalError("matrix shape mismatch in -");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
  }
  Matrix operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InternalError("matrix shape mismatch in *");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          m.at(i, j) += aik * b.at(k, j);
      }
    return m;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = s * a.a_[k];
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<Scalar> mul_vec(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw InternalError("matrix/vector size mismatch");
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Scalar acc;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) acc += at(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  Scalar trace() const {
    Scalar t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
  }

  /// Row-major flattening, used for Krylov-style dependency searches.
  std::vector<Scalar> flatten() const { return a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw InternalError("vstack width mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

struct RrefResult {
  Matrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with deterministic pivoting: columns left to
/// right, first nonzero row from the top. Idempotent; the result is the
/// unique canonical representative of the row space.
inline RrefResult rref(Matrix m) {
  std::size_t pr = 0;  // next pivot row
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(pr, j));
    Scalar inv = m.at(pr, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pr, j) = inv * m.at(pr, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pr || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(pr, j);
    }
    pivots.push_back(col);
    ++pr;
  }
  return RrefResult{std::move(m), pivots.size(), std::move(pivots)};
}

struct LinearSolution {
  std::vector<Scalar> particular;       // free variables pinned to zero
  std::vector<std::vector<Scalar>> homogeneous;  // basis of the solution space of m x = 0
};

/// One exact solution of m x = b plus the homogeneous solution set, or
/// absent when the system is inconsistent.
inline std::optional<LinearSolution> solve_linear(const Matrix& m,
                                                  const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw InternalError("rhs length mismatch in solve");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  for (std::size_t k = 0; k < r.rank; ++k)
    if (r.pivot_cols[k] == m.cols()) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(m.cols(), Scalar());
  for (std::size_t k = 0; k < r.rank; ++k)
    sol.particular[r.pivot_cols[k]] = r.m.at(k, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(m.cols());
    v[j] = Scalar(1);
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivot_cols[k]] = -r.m.at(k, j);
    sol.homogeneous.push_back(std::move(v));
  }
  return sol;
}

/// Exact inverse of a square invertible matrix (rref of [A | I]).
inline Matrix matrix_inverse(const Matrix& a) {
  if (!a.is_square()) throw InternalError("inverse of non-square matrix");
  std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank != n || r.pivot_cols.back() >= n)
    throw InternalError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  return inv;
}

inline std::vector<Scalar> scale_vec(const Scalar& s, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

inline std::vector<Scalar> add_vec(const std::vector<Scalar>& a,
                                   const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  std::vector<Scalar> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline std::vector<Scalar> sub_vec(const std::vector<Scalar>& a,
                                   const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  std::vector<Scalar> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool is_zero_vec(const std::vector<Scalar>& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace symcheck
