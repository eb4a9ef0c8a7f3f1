#pragma once

#include "symcheck/matrix.hpp"

#include <cstddef>
#include <vector>

namespace symcheck {

/// Linear subspace of coordinate space, stored as a reduced-row-echelon basis.
/// The echelon basis is the unique canonical representative, so equality and
/// containment are entrywise checks.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    return from_rows(Matrix::identity(ambient));
  }

  /// Span of the rows; rows may be dependent or zero.
  static Subspace from_rows(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    Matrix b(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = r.m.at(i, j);
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace span(const std::vector<std::vector<Scalar>>& vecs,
                       std::size_t ambient) {
    if (vecs.empty()) return zero(ambient);
    return from_rows(Matrix::from_rows(vecs));
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Scalar> basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw InternalError("ambient mismatch in contains");
    // Reduce against the echelon basis; membership iff the residue vanishes.
    std::vector<Scalar> w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t lead = 0;
      while (lead < ambient_ && basis_.at(i, lead).is_zero()) ++lead;
      if (lead == ambient_) continue;
      if (!w[lead].is_zero()) {
        Scalar c = w[lead];
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
      }
    }
    return is_zero_vec(w);
  }

  bool contains_subspace(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// Null space {x : m x = 0}, canonicalized.
inline Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(m.cols());
    v[j] = Scalar(1);
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivot_cols[k]] = -r.m.at(k, j);
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, m.cols());
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InternalError("ambient mismatch in sum");
  return Subspace::from_rows(vstack(a.basis(), b.basis()));
}

/// Intersection via the kernel of the stacked constraint systems: x lies in a
/// row space iff it is annihilated (bilinear pairing) by the kernel of the
/// basis matrix.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw InternalError("ambient mismatch in intersect");
  Subspace ca = kernel(a.basis());
  Subspace cb = kernel(b.basis());
  return kernel(vstack(ca.basis(), cb.basis()));
}

}  // namespace symcheck
