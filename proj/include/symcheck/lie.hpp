#pragma once

#include "symcheck/eigen.hpp"
#include "symcheck/matrix.hpp"
#include "symcheck/polynomial.hpp"
#include "symcheck/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symcheck {

/// Matrix realization of a structure-constant algebra: basis_mats[i] is the
/// i-th basis vector as a size x size matrix.
struct Realization {
  std::size_t size = 0;
  std::vector<Matrix> basis_mats;
};

/// Finite-dimensional Lie algebra given by structure constants, optionally
/// carrying the matrix realization it was derived from. Immutable after
/// construction; all operations are pure.
class LieAlgebra {
 public:
  /// Build from a matrix realization. Structure constants are obtained by
  /// expanding commutators of basis matrices; the basis must be linearly
  /// independent and closed under the commutator.
  static LieAlgebra from_realization(std::vector<Matrix> basis_mats) {
    if (basis_mats.empty()) throw InternalError("empty basis");
    LieAlgebra L;
    L.dim_ = basis_mats.size();
    std::size_t n = basis_mats.front().rows();
    for (const Matrix& b : basis_mats)
      if (b.rows() != n || b.cols() != n)
        throw InternalError("realization matrices have mixed sizes");

    Matrix flat(L.dim_, n * n);
    for (std::size_t i = 0; i < L.dim_; ++i) flat.set_row(i, basis_mats[i].flatten());
    L.expand_ = flat.transpose();  // expand_ c = flattened matrix
    {
      RrefResult r = rref(flat);
      if (r.rank != L.dim_) throw InternalError("realization basis is dependent");
    }

    L.ad_basis_.assign(L.dim_, Matrix(L.dim_, L.dim_));
    for (std::size_t i = 0; i < L.dim_; ++i)
      for (std::size_t j = 0; j < L.dim_; ++j) {
        Matrix comm = basis_mats[i] * basis_mats[j] - basis_mats[j] * basis_mats[i];
        auto sol = solve_linear(L.expand_, comm.flatten());
        if (!sol) throw InternalError("basis not closed under commutator");
        for (std::size_t k = 0; k < L.dim_; ++k)
          L.ad_basis_[i].at(k, j) = sol->particular[k];
      }
    L.realization_ = Realization{n, std::move(basis_mats)};
    L.compute_killing();
    return L;
  }

  /// Build from an explicit table: table[i][j] = coordinates of [b_i, b_j].
  static LieAlgebra from_structure(
      const std::vector<std::vector<std::vector<Scalar>>>& table) {
    LieAlgebra L;
    L.dim_ = table.size();
    L.ad_basis_.assign(L.dim_, Matrix(L.dim_, L.dim_));
    for (std::size_t i = 0; i < L.dim_; ++i)
      for (std::size_t j = 0; j < L.dim_; ++j)
        for (std::size_t k = 0; k < L.dim_; ++k)
          L.ad_basis_[i].at(k, j) = table[i][j][k];
    L.compute_killing();
    return L;
  }

  std::size_t dim() const { return dim_; }
  bool has_realization() const { return realization_.has_value(); }
  const Realization& realization() const { return *realization_; }
  const Matrix& killing_gram() const { return killing_; }
  const Matrix& ad_basis(std::size_t i) const { return ad_basis_[i]; }

  /// Coordinates of [b_i, b_j].
  std::vector<Scalar> structure_constant(std::size_t i, std::size_t j) const {
    std::vector<Scalar> v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = ad_basis_[i].at(k, j);
    return v;
  }

  /// Expand an ambient matrix in the realization basis; absent when the
  /// matrix does not lie in the span.
  std::optional<std::vector<Scalar>> coords_of_matrix(const Matrix& m) const {
    if (!realization_) throw InternalError("algebra has no realization");
    if (m.rows() != realization_->size || m.cols() != realization_->size)
      throw ParseError("matrix has wrong size for this algebra");
    auto sol = solve_linear(expand_, m.flatten());
    if (!sol) return std::nullopt;
    return sol->particular;
  }

  Matrix matrix_of_coords(const std::vector<Scalar>& coords) const {
    if (!realization_) throw InternalError("algebra has no realization");
    Matrix m(realization_->size, realization_->size);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (coords[i].is_zero()) continue;
      m = m + coords[i] * realization_->basis_mats[i];
    }
    return m;
  }

 private:
  void compute_killing() {
    killing_ = Matrix(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        Scalar t = (ad_basis_[i] * ad_basis_[j]).trace();
        killing_.at(i, j) = t;
        killing_.at(j, i) = t;
      }
  }

  std::size_t dim_ = 0;
  std::vector<Matrix> ad_basis_;
  std::optional<Realization> realization_;
  Matrix expand_;  // (size^2 x dim) flattened-basis matrix for coordinate solves
  Matrix killing_;
};

struct Element {
  const LieAlgebra* alg = nullptr;
  std::vector<Scalar> coords;

  Element() = default;
  Element(const LieAlgebra& a, std::vector<Scalar> c) : alg(&a), coords(std::move(c)) {
    if (coords.size() != a.dim()) throw InternalError("element coordinate length");
  }

  static Element zero(const LieAlgebra& a) {
    return Element(a, std::vector<Scalar>(a.dim()));
  }
  static Element basis(const LieAlgebra& a, std::size_t i) {
    std::vector<Scalar> c(a.dim());
    c[i] = Scalar(1);
    return Element(a, std::move(c));
  }

  bool is_zero() const { return is_zero_vec(coords); }

  friend Element operator+(const Element& x, const Element& y) {
    require_same(x, y);
    return Element(*x.alg, add_vec(x.coords, y.coords));
  }
  friend Element operator-(const Element& x, const Element& y) {
    require_same(x, y);
    return Element(*x.alg, sub_vec(x.coords, y.coords));
  }
  friend Element operator*(const Scalar& s, const Element& x) {
    return Element(*x.alg, scale_vec(s, x.coords));
  }
  Element operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const Element& x, const Element& y) {
    return x.alg == y.alg && x.coords == y.coords;
  }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

  static void require_same(const Element& x, const Element& y) {
    if (x.alg != y.alg) throw InternalError("elements from different algebras");
  }
};

inline Element element_from_matrix(const LieAlgebra& L, const Matrix& m) {
  auto c = L.coords_of_matrix(m);
  if (!c) throw ParseError("matrix does not lie in the algebra");
  return Element(L, std::move(*c));
}

/// Matrix of y -> [x, y] in the algebra basis.
inline Matrix ad_matrix(const Element& x) {
  const LieAlgebra& L = *x.alg;
  Matrix m(L.dim(), L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (x.coords[i].is_zero()) continue;
    m = m + x.coords[i] * L.ad_basis(i);
  }
  return m;
}

inline Element bracket(const Element& x, const Element& y) {
  Element::require_same(x, y);
  return Element(*x.alg, ad_matrix(x).mul_vec(y.coords));
}

inline Scalar killing(const Element& x, const Element& y) {
  Element::require_same(x, y);
  const Matrix& K = x.alg->killing_gram();
  Scalar acc;
  for (std::size_t i = 0; i < K.rows(); ++i) {
    if (x.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < K.cols(); ++j)
      if (!y.coords[j].is_zero()) acc += x.coords[i] * K.at(i, j) * y.coords[j];
  }
  return acc;
}

/// {v in inside : [v, y] = 0 for every y in of}, computed as one stacked
/// kernel over the coordinates of inside.
inline Subspace centralizer(const Subspace& inside, const std::vector<Element>& of) {
  if (of.empty()) return inside;
  const LieAlgebra& L = *of.front().alg;
  if (inside.ambient() != L.dim()) throw InternalError("centralizer ambient mismatch");
  for (const Element& y : of) Element::require_same(of.front(), y);

  std::size_t d = inside.dim();
  if (d == 0) return inside;
  Matrix basis_t = inside.basis().transpose();  // ambient x d
  Matrix stacked(0, d);
  for (const Element& y : of) {
    // [v, y] = -ad(y) v for v in the subspace.
    Matrix block = ad_matrix(y) * basis_t;
    stacked = vstack(stacked, block);
  }
  Subspace coeffs = kernel(stacked);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) {
    std::vector<Scalar> c = coeffs.basis_row(i);
    std::vector<Scalar> v(L.dim());
    for (std::size_t k = 0; k < d; ++k)
      if (!c[k].is_zero()) v = add_vec(v, scale_vec(c[k], inside.basis_row(k)));
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, L.dim());
}

inline Subspace full_space(const LieAlgebra& L) { return Subspace::full(L.dim()); }

/// Nilpotency via the adjoint minimal polynomial; when a realization exists
/// the realization matrix is cross-checked as well.
inline bool is_nilpotent_element(const Element& x) {
  if (x.is_zero()) return true;
  bool ad_nilpotent = poly_is_power_of_t(min_poly(ad_matrix(x)));
  if (x.alg->has_realization()) {
    bool mat_nilpotent = poly_is_power_of_t(min_poly(x.alg->matrix_of_coords(x.coords)));
    if (mat_nilpotent != ad_nilpotent)
      throw InternalError("ad/realization nilpotency disagreement");
  }
  return ad_nilpotent;
}

inline bool is_semisimple_element(const Element& x) {
  return poly_squarefree(min_poly(ad_matrix(x)));
}

/// Span of all pairwise brackets of a basis of u; u need not be a subalgebra.
inline Subspace derived_subspace(const Subspace& u, const LieAlgebra& L) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = i + 1; j < u.dim(); ++j) {
      Element bi(L, u.basis_row(i));
      Element bj(L, u.basis_row(j));
      rows.push_back(bracket(bi, bj).coords);
    }
  return Subspace::span(rows, L.dim());
}

/// Structural diagnostics: antisymmetry, Jacobi on all basis triples,
/// realization consistency, nondegenerate Killing form. Empty result = pass.
inline std::vector<std::string> verify_structure(const LieAlgebra& L) {
  std::vector<std::string> bad;
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::vector<Scalar> cij = L.structure_constant(i, j);
      std::vector<Scalar> cji = L.structure_constant(j, i);
      if (!is_zero_vec(add_vec(cij, cji)))
        bad.push_back("antisymmetry violation at basis pair (" + std::to_string(i) +
                      "," + std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < n; ++i) {
    Element bi = Element::basis(L, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      Element bj = Element::basis(L, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        Element bk = Element::basis(L, k);
        Element jac = bracket(bi, bracket(bj, bk)) + bracket(bj, bracket(bk, bi)) +
                      bracket(bk, bracket(bi, bj));
        if (!jac.is_zero())
          bad.push_back("jacobi violation at basis triple (" + std::to_string(i) +
                        "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
  if (L.has_realization()) {
    const Realization& R = L.realization();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix comm =
            R.basis_mats[i] * R.basis_mats[j] - R.basis_mats[j] * R.basis_mats[i];
        if (comm != L.matrix_of_coords(L.structure_constant(i, j)))
          bad.push_back("realization mismatch at basis pair (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      }
  }
  if (rref(L.killing_gram()).rank != n)
    bad.push_back("killing form is degenerate (rank " +
                  std::to_string(rref(L.killing_gram()).rank) + " of " +
                  std::to_string(n) + ")");
  return bad;
}

}  // namespace symcheck
