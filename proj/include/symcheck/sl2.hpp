#pragma once

#include "symcheck/pair.hpp"
#include "symcheck/rng.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace symcheck {

/// sl2-triple normalized so that h lies in k and e, f lie in p.
struct NormalizedTriple {
  Element e, h, f;
  Subspace s;  // three-dimensional span

  std::vector<Element> elements() const { return {e, h, f}; }
};

/// Embeds a nonzero nilpotent e of p into a normalized triple.
///
/// Steps: solve ad(e)^2 z = -2 e and set h0 = [e, z], so [h0, e] = 2e with h0
/// in the image of ad(e); average h = (h0 + theta h0)/2, which stays a valid
/// neutral element because theta e = -e; solve [h, f0] = -2 f0, [e, f0] = h;
/// average f = (f0 - theta f0)/2. Linear solves take the echelon particular
/// solution (free variables zero), so the result is reproducible; the
/// normalized triple over a fixed e is in fact unique.
inline NormalizedTriple complete_normalized_triple(const SymmetricPair& pair,
                                                   const Element& e) {
  const LieAlgebra& L = pair.alg();
  if (e.is_zero()) throw std::invalid_argument("cannot complete the zero element");
  if (!pair.p.contains(e.coords))
    throw std::invalid_argument("element does not lie in p");
  if (!is_nilpotent_element(e))
    throw std::invalid_argument("element is not nilpotent");

  Matrix ad_e = ad_matrix(e);
  auto z = solve_linear(ad_e * ad_e, scale_vec(Scalar(-2), e.coords));
  if (!z) throw InternalError("neutral-element system inconsistent");
  Element h0 = bracket(e, Element(L, z->particular));
  Element h = rational_scalar(1, 2) * (h0 + pair.theta(h0));

  Matrix ad_h = ad_matrix(h);
  Matrix system = vstack(ad_h + Scalar(2) * Matrix::identity(L.dim()), ad_e);
  std::vector<Scalar> rhs(L.dim(), Scalar(0));
  rhs.insert(rhs.end(), h.coords.begin(), h.coords.end());
  auto f0 = solve_linear(system, rhs);
  if (!f0) throw InternalError("lowering-element system inconsistent");
  Element f0e(L, f0->particular);
  Element f = rational_scalar(1, 2) * (f0e - pair.theta(f0e));

  if (bracket(h, e) != Scalar(2) * e || bracket(h, f) != Scalar(-2) * f ||
      bracket(e, f) != h)
    throw InternalError("triple completion produced wrong brackets");
  if (!pair.k.contains(h.coords) || !pair.p.contains(f.coords))
    throw InternalError("triple completion not normalized");
  Subspace s = Subspace::span({e.coords, h.coords, f.coords}, L.dim());
  if (s.dim() != 3) throw InternalError("triple does not span three dimensions");
  return NormalizedTriple{e, h, f, std::move(s)};
}

/// Integer grading g_d = {x : [h, x] = d x} with the k/p refinement
/// g_d = g_d^+ + g_d^-.
struct HGrading {
  std::map<std::int64_t, Subspace> parts;
  std::map<std::int64_t, Subspace> parts_k;
  std::map<std::int64_t, Subspace> parts_p;

  Subspace part(std::int64_t d, std::size_t ambient) const {
    auto it = parts.find(d);
    return it == parts.end() ? Subspace::zero(ambient) : it->second;
  }
  Subspace part_k(std::int64_t d, std::size_t ambient) const {
    auto it = parts_k.find(d);
    return it == parts_k.end() ? Subspace::zero(ambient) : it->second;
  }
  Subspace part_p(std::int64_t d, std::size_t ambient) const {
    auto it = parts_p.find(d);
    return it == parts_p.end() ? Subspace::zero(ambient) : it->second;
  }
};

inline HGrading grading_by_h(const SymmetricPair& pair, const Element& h) {
  const LieAlgebra& L = pair.alg();
  EigenDecomposition eig = integer_eigenvalues(ad_matrix(h), /*require_semisimple=*/true);
  HGrading g;
  std::size_t total = 0;
  for (auto& [lambda, space] : eig.spaces) {
    if (!lambda.is_real() || !is_integer(lambda.re))
      throw SpectrumError(format_scalar(lambda) + " is not a rational integer");
    std::int64_t d = to_int64(lambda.re);
    Subspace plus = intersect(space, pair.k);
    Subspace minus = intersect(space, pair.p);
    if (plus.dim() + minus.dim() != space.dim())
      throw InternalError("theta does not preserve the grading");
    total += space.dim();
    g.parts_k.emplace(d, std::move(plus));
    g.parts_p.emplace(d, std::move(minus));
    g.parts.emplace(d, std::move(space));
  }
  if (total != L.dim()) throw InternalError("grading does not fill g");
  return g;
}

inline bool is_even(const HGrading& g) {
  for (const auto& [d, space] : g.parts)
    if (d % 2 != 0 && space.dim() > 0) return false;
  return true;
}

struct TripleCentralizers {
  Subspace g_s, k_s, p_s;
};

inline TripleCentralizers triple_centralizers(const SymmetricPair& pair,
                                              const NormalizedTriple& triple) {
  TripleCentralizers out;
  out.g_s = centralizer(full_space(pair.alg()), triple.elements());
  out.k_s = centralizer(pair.k, triple.elements());
  out.p_s = centralizer(pair.p, triple.elements());
  if (out.k_s.dim() + out.p_s.dim() != out.g_s.dim())
    throw InternalError("triple centralizer is not theta-stable");
  return out;
}

/// Parabolic attached to the grading: q = sum_{d>=0} g_d with Levi part
/// l = g_0 and nilradical u = sum_{d>0} g_d.
struct JMParabolic {
  Subspace q, l, u;
};

inline JMParabolic jm_parabolic(const HGrading& g, std::size_t ambient) {
  JMParabolic out;
  out.q = Subspace::zero(ambient);
  out.l = Subspace::zero(ambient);
  out.u = Subspace::zero(ambient);
  for (const auto& [d, space] : g.parts) {
    if (d < 0) continue;
    out.q = sum(out.q, space);
    if (d == 0)
      out.l = sum(out.l, space);
    else
      out.u = sum(out.u, space);
  }
  return out;
}

/// Checks the reductive-Levi shape of g^e at the instance r = g^s:
/// g^e = g^s + u_e with u_e = g^e intersect (positive grading), the sum
/// direct, u_e an ideal of g^e, and every sampled element of u_e nilpotent.
/// Positive-grade membership already forces nilpotency; the sampling guards
/// the bookkeeping.
inline bool levi_instance_check(const SymmetricPair& pair, const Element& e,
                                const NormalizedTriple& triple, const HGrading& grading,
                                Rng rng, std::size_t samples) {
  const LieAlgebra& L = pair.alg();
  Subspace g_e = centralizer(full_space(L), {e});
  Subspace g_s = centralizer(full_space(L), triple.elements());
  Subspace positive = Subspace::zero(L.dim());
  for (const auto& [d, space] : grading.parts)
    if (d >= 1) positive = sum(positive, space);
  Subspace u_e = intersect(g_e, positive);

  if (sum(g_s, u_e) != g_e) return false;
  if (g_s.dim() + u_e.dim() != g_e.dim()) return false;
  for (std::size_t i = 0; i < g_e.dim(); ++i)
    for (std::size_t j = 0; j < u_e.dim(); ++j) {
      Element x(L, g_e.basis_row(i));
      Element y(L, u_e.basis_row(j));
      if (!u_e.contains(bracket(x, y).coords)) return false;
    }
  for (std::size_t trial = 0; trial < samples && u_e.dim() > 0; ++trial) {
    Element x = Element::zero(L);
    for (std::size_t j = 0; j < u_e.dim(); ++j)
      x = x + rng.small_int() * Element(L, u_e.basis_row(j));
    if (!is_nilpotent_element(x)) return false;
  }
  return true;
}

}  // namespace symcheck
