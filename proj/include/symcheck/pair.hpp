#pragma once

#include "symcheck/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace symcheck {

/// A catalog pair with its induced Z2-grading g = k + p.
struct SymmetricPair {
  const CatalogEntry* entry = nullptr;
  Subspace k;
  Subspace p;

  const LieAlgebra& alg() const { return entry->alg(); }
  Element theta(const Element& x) const { return apply_involution(*entry, x); }

  /// x -> (x + theta x) / 2.
  Element project_k(const Element& x) const {
    return rational_scalar(1, 2) * (x + theta(x));
  }
  /// x -> (x - theta x) / 2.
  Element project_p(const Element& x) const {
    return rational_scalar(1, 2) * (x - theta(x));
  }

  std::vector<Element> subspace_elements(const Subspace& s) const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < s.dim(); ++i)
      out.emplace_back(alg(), s.basis_row(i));
    return out;
  }
};

/// k = ker(theta - id), p = ker(theta + id), with the grading inclusions and
/// the Killing-orthogonality of the two pieces verified.
inline SymmetricPair decompose_kp(const CatalogEntry& entry) {
  const LieAlgebra& L = entry.alg();
  std::size_t n = L.dim();
  SymmetricPair pair;
  pair.entry = &entry;
  pair.k = kernel(entry.theta - Matrix::identity(n));
  pair.p = kernel(entry.theta + Matrix::identity(n));
  if (pair.k.dim() + pair.p.dim() != n)
    throw InternalError("k/p dimensions do not add up");
  if (pair.p.dim() == 0) throw InternalError("p = 0: theta is the identity");

  auto in = [&](const Subspace& a, const Subspace& b, const Subspace& target,
                const char* what) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) {
        Element x(L, a.basis_row(i));
        Element y(L, b.basis_row(j));
        if (!target.contains(bracket(x, y).coords))
          throw InternalError(std::string("grading violation: ") + what);
      }
  };
  in(pair.k, pair.k, pair.k, "[k,k] not in k");
  in(pair.k, pair.p, pair.p, "[k,p] not in p");
  in(pair.p, pair.p, pair.k, "[p,p] not in k");

  for (std::size_t i = 0; i < pair.k.dim(); ++i)
    for (std::size_t j = 0; j < pair.p.dim(); ++j) {
      Element x(L, pair.k.basis_row(i));
      Element y(L, pair.p.basis_row(j));
      if (!killing(x, y).is_zero())
        throw InternalError("k and p are not Killing-orthogonal");
    }
  return pair;
}

struct CartanSubspaceData {
  Subspace a;
  std::size_t r = 0;
  std::vector<Element> basis;
};

/// Checks that the stored basis spans a Cartan subspace of p: abelian, toral
/// (semisimple elements), and maximal in the sense p^a = a.
inline CartanSubspaceData verify_cartan_subspace(const SymmetricPair& pair,
                                                 const std::vector<Element>& basis) {
  const LieAlgebra& L = pair.alg();
  for (const Element& x : basis)
    if (!pair.p.contains(x.coords))
      throw InternalError("cartan basis element outside p");
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!bracket(basis[i], basis[j]).is_zero())
        throw InternalError("cartan subspace not abelian");
  for (const Element& x : basis)
    if (!is_semisimple_element(x)) throw InternalError("cartan subspace not toral");

  std::vector<std::vector<Scalar>> rows;
  for (const Element& x : basis) rows.push_back(x.coords);
  Subspace a = Subspace::span(rows, L.dim());
  if (a.dim() != basis.size()) throw InternalError("cartan basis is dependent");
  Subspace pa = centralizer(pair.p, basis);
  if (pa != a) throw InternalError("cartan subspace not maximal: p^a != a");
  return CartanSubspaceData{std::move(a), basis.size(), basis};
}

struct RestrictedRoot {
  std::vector<Scalar> alpha;  // values on the Cartan basis
  Subspace space;
  std::size_t multiplicity() const { return space.dim(); }
};

struct RestrictedRootData {
  std::vector<RestrictedRoot> roots;  // nonzero joint eigenvalues, sorted
  Subspace zero_space;                // g^a
  std::vector<std::size_t> positives;
  std::vector<std::size_t> simples;
  bool reduced = true;
};

namespace detail {
inline std::vector<Scalar> negate_root(const std::vector<Scalar>& alpha) {
  std::vector<Scalar> out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) out[i] = -alpha[i];
  return out;
}

inline bool root_vec_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return scalar_less(a[i], b[i]);
  }
  return false;
}

/// Restriction of ad(x) to an ad(x)-invariant subspace, in the coordinates of
/// the subspace basis.
inline Matrix restrict_ad(const LieAlgebra& L, const Element& x, const Subspace& s) {
  Matrix basis_t = s.basis().transpose();
  Matrix image = ad_matrix(x) * basis_t;  // ambient x d
  Matrix out(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    std::vector<Scalar> col(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) col[i] = image.at(i, j);
    auto sol = solve_linear(s.basis().transpose(), col);
    if (!sol) throw InternalError("subspace is not ad-invariant");
    for (std::size_t i = 0; i < s.dim(); ++i) out.at(i, j) = sol->particular[i];
  }
  return out;
}

inline Subspace lift(const Subspace& sub, const Subspace& frame, std::size_t ambient) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    std::vector<Scalar> c = sub.basis_row(i);
    std::vector<Scalar> v(ambient);
    for (std::size_t k = 0; k < frame.dim(); ++k)
      if (!c[k].is_zero()) v = add_vec(v, scale_vec(c[k], frame.basis_row(k)));
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, ambient);
}
}  // namespace detail

/// Simultaneous eigenspace decomposition of g under the commuting family
/// ad(a_1), ..., ad(a_r). Verifies the dimension bookkeeping and that theta
/// maps the alpha-space onto the (-alpha)-space.
inline RestrictedRootData restricted_roots(const SymmetricPair& pair,
                                           const CartanSubspaceData& cartan) {
  const LieAlgebra& L = pair.alg();
  std::size_t n = L.dim();
  std::vector<std::pair<std::vector<Scalar>, Subspace>> parts;
  parts.emplace_back(std::vector<Scalar>{}, Subspace::full(n));

  for (std::size_t j = 0; j < cartan.basis.size(); ++j) {
    std::vector<std::pair<std::vector<Scalar>, Subspace>> refined;
    for (auto& [alpha, space] : parts) {
      Matrix restricted = detail::restrict_ad(L, cartan.basis[j], space);
      EigenDecomposition eig;
      try {
        eig = integer_eigenvalues(restricted, /*require_semisimple=*/true);
      } catch (const SpectrumError& err) {
        throw SpectrumError(std::string(err.what()) +
                            " (cartan basis element " + std::to_string(j) + ")");
      }
      for (auto& [lambda, sub] : eig.spaces) {
        std::vector<Scalar> extended = alpha;
        extended.push_back(lambda);
        refined.emplace_back(std::move(extended), detail::lift(sub, space, n));
      }
    }
    parts = std::move(refined);
  }

  RestrictedRootData data;
  data.zero_space = Subspace::zero(n);
  std::size_t total = 0;
  for (auto& [alpha, space] : parts) {
    total += space.dim();
    if (is_zero_vec(alpha)) {
      data.zero_space = space;
    } else {
      data.roots.push_back(RestrictedRoot{alpha, space});
    }
  }
  if (total != n) throw InternalError("restricted root spaces do not fill g");
  std::sort(data.roots.begin(), data.roots.end(),
            [](const RestrictedRoot& a, const RestrictedRoot& b) {
              return detail::root_vec_less(a.alpha, b.alpha);
            });

  // theta pairing: theta carries each root space onto the opposite one.
  for (const RestrictedRoot& root : data.roots) {
    std::vector<Scalar> neg = detail::negate_root(root.alpha);
    auto it = std::find_if(data.roots.begin(), data.roots.end(),
                           [&](const RestrictedRoot& r) { return r.alpha == neg; });
    if (it == data.roots.end())
      throw InternalError("restricted root without a negative");
    if (it->multiplicity() != root.multiplicity())
      throw InternalError("restricted root multiplicities are asymmetric");
    for (std::size_t i = 0; i < root.space.dim(); ++i) {
      Element x(L, root.space.basis_row(i));
      if (!it->space.contains(pair.theta(x).coords))
        throw InternalError("theta does not map root space to its negative");
    }
  }
  for (const RestrictedRoot& root : data.roots) {
    std::vector<Scalar> doubled;
    for (const Scalar& s : root.alpha) doubled.push_back(Scalar(2) * s);
    if (std::any_of(data.roots.begin(), data.roots.end(),
                    [&](const RestrictedRoot& r) { return r.alpha == doubled; }))
      data.reduced = false;
  }
  return data;
}

/// Positivity via the fixed deterministic functional l(alpha) = sum_j M^j
/// alpha_j; simple roots are the positives not expressible as a sum of two
/// positives. Non-reduced (BC) systems are handled: 2 alpha = alpha + alpha
/// is always a sum of positives.
inline void simple_system(RestrictedRootData& data, std::size_t rank) {
  if (data.roots.empty()) throw InternalError("empty restricted root system");
  for (const RestrictedRoot& root : data.roots)
    for (const Scalar& v : root.alpha)
      if (!v.is_real())
        throw InternalError("restricted root with non-real value");

  Rational m(10000);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Rational> ell(data.roots.size());
    bool tie = false;
    for (std::size_t i = 0; i < data.roots.size(); ++i) {
      Rational acc(0);
      Rational power(1);
      for (const Scalar& v : data.roots[i].alpha) {
        power *= m;
        acc += power * v.re;
      }
      ell[i] = acc;
      if (acc == 0) tie = true;
    }
    for (std::size_t i = 0; i < ell.size() && !tie; ++i)
      for (std::size_t j = i + 1; j < ell.size(); ++j)
        if (ell[i] == ell[j]) {
          tie = true;
          break;
        }
    if (tie) {
      m *= 10000;  // deterministic retry with a larger base
      continue;
    }
    data.positives.clear();
    for (std::size_t i = 0; i < data.roots.size(); ++i)
      if (ell[i] > 0) data.positives.push_back(i);

    data.simples.clear();
    for (std::size_t i : data.positives) {
      bool is_sum = false;
      for (std::size_t a : data.positives) {
        for (std::size_t b : data.positives) {
          std::vector<Scalar> s = data.roots[a].alpha;
          for (std::size_t t = 0; t < s.size(); ++t) s[t] += data.roots[b].alpha[t];
          if (s == data.roots[i].alpha) {
            is_sum = true;
            break;
          }
        }
        if (is_sum) break;
      }
      if (!is_sum) data.simples.push_back(i);
    }
    if (data.simples.size() != rank)
      throw InternalError("simple system size " + std::to_string(data.simples.size()) +
                          " does not match rank " + std::to_string(rank));
    return;
  }
  throw InternalError("positivity functional kept producing ties");
}

/// The unique c in a with alpha(c) = 2 for every simple root.
inline Element chamber_element(const CartanSubspaceData& cartan,
                               const RestrictedRootData& data) {
  std::size_t r = cartan.r;
  Matrix system(data.simples.size(), r);
  std::vector<Scalar> rhs(data.simples.size(), Scalar(2));
  for (std::size_t row = 0; row < data.simples.size(); ++row)
    for (std::size_t col = 0; col < r; ++col)
      system.at(row, col) = data.roots[data.simples[row]].alpha[col];
  if (rref(system).rank != r)
    throw InternalError("simple roots do not span the dual of the Cartan subspace");
  auto sol = solve_linear(system, rhs);
  if (!sol) throw InternalError("chamber system is inconsistent");
  Element c = Element::zero(*cartan.basis.front().alg);
  for (std::size_t j = 0; j < r; ++j)
    c = c + sol->particular[j] * cartan.basis[j];
  return c;
}

/// k^c = k^a and p^c = a, as canonical subspaces.
inline bool verify_chamber_centralizers(const SymmetricPair& pair,
                                        const CartanSubspaceData& cartan,
                                        const Element& c) {
  Subspace kc = centralizer(pair.k, {c});
  Subspace ka = centralizer(pair.k, cartan.basis);
  Subspace pc = centralizer(pair.p, {c});
  return kc == ka && pc == cartan.a;
}

/// Everything the verification battery needs about one catalog pair.
struct PairContext {
  SymmetricPair pair;
  CartanSubspaceData cartan;
  RestrictedRootData roots;
  Element chamber;
  bool chamber_identities = false;

  const CatalogEntry& entry() const { return *pair.entry; }
  const LieAlgebra& alg() const { return pair.alg(); }
};

inline PairContext analyze_structure(const CatalogEntry& entry) {
  PairContext ctx{decompose_kp(entry), {}, {}, Element::zero(entry.alg())};
  ctx.cartan = verify_cartan_subspace(ctx.pair, entry.cartan_basis);
  ctx.roots = restricted_roots(ctx.pair, ctx.cartan);
  simple_system(ctx.roots, ctx.cartan.r);
  ctx.chamber = chamber_element(ctx.cartan, ctx.roots);
  ctx.chamber_identities = verify_chamber_centralizers(ctx.pair, ctx.cartan, ctx.chamber);
  return ctx;
}

}  // namespace symcheck
