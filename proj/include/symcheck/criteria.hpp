#pragma once

#include "symcheck/sl2.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symcheck {

/// N(p) membership: nilpotent and anti-fixed by theta.
inline bool is_in_Np(const SymmetricPair& pair, const Element& x) {
  return pair.p.contains(x.coords) && is_nilpotent_element(x);
}

/// dim K.e = dim k - dim k^e; the affine orbit dimension inside p.
inline std::size_t orbit_dimension(const SymmetricPair& pair, const Element& e) {
  return pair.k.dim() - centralizer(pair.k, {e}).dim();
}

/// An orbit in the nilpotent cone of p whose dimension reaches
/// dim p - r is open in an irreducible component, which is what principal
/// means here.
inline bool is_principal(const SymmetricPair& pair, std::size_t rank, const Element& e) {
  return orbit_dimension(pair, e) == pair.p.dim() - rank;
}

/// Centralizer criterion: p^s = 0.
inline bool minus1_via_centralizer(const TripleCentralizers& cents) {
  return cents.p_s.dim() == 0;
}

/// Graded criterion: dim g_0^- = dim g_2^+.
inline bool minus1_via_grading(const SymmetricPair& pair, const HGrading& grading) {
  std::size_t n = pair.alg().dim();
  return grading.part_p(0, n).dim() == grading.part_k(2, n).dim();
}

/// Even-case criterion: dim l^- = dim u^+ / [u,u]^+; absent when the grading
/// has odd parts. The quotient dimension is a difference, taken after
/// verifying [u,u]^+ really sits inside u^+.
inline std::optional<bool> minus1_via_even(const SymmetricPair& pair,
                                           const HGrading& grading) {
  if (!is_even(grading)) return std::nullopt;
  const LieAlgebra& L = pair.alg();
  JMParabolic par = jm_parabolic(grading, L.dim());
  Subspace l_minus = intersect(par.l, pair.p);
  Subspace u_plus = intersect(par.u, pair.k);
  Subspace derived = derived_subspace(par.u, L);
  Subspace derived_plus = intersect(derived, pair.k);
  if (!u_plus.contains_subspace(derived_plus))
    throw InternalError("[u,u]^+ escapes u^+");
  return l_minus.dim() == u_plus.dim() - derived_plus.dim();
}

/// k^s = 0; the contrasting notion to the centralizer criterion.
inline bool is_noticed(const TripleCentralizers& cents) {
  return cents.k_s.dim() == 0;
}

namespace detail {
/// [k, x] as a subspace of p.
inline Subspace bracket_k_x(const SymmetricPair& pair, const Element& x) {
  const LieAlgebra& L = pair.alg();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < pair.k.dim(); ++i)
    rows.push_back(bracket(Element(L, pair.k.basis_row(i)), x).coords);
  return Subspace::span(rows, L.dim());
}
}  // namespace detail

/// The orthogonality identity behind the duality argument: the Killing
/// orthocomplement of [k, x] taken inside p equals p^x.
inline bool perp_identity_check(const SymmetricPair& pair, const Element& x) {
  const LieAlgebra& L = pair.alg();
  if (!pair.p.contains(x.coords)) throw std::invalid_argument("x is not in p");
  Subspace kx = detail::bracket_k_x(pair, x);
  // {y in p : kappa(y, v) = 0 for all v in [k,x]}, via one kernel over the
  // coordinates of p.
  Matrix pairing(kx.dim(), pair.p.dim());
  for (std::size_t i = 0; i < kx.dim(); ++i) {
    Element v(L, kx.basis_row(i));
    for (std::size_t j = 0; j < pair.p.dim(); ++j)
      pairing.at(i, j) = killing(v, Element(L, pair.p.basis_row(j)));
  }
  Subspace coeffs = kernel(pairing);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) {
    std::vector<Scalar> c = coeffs.basis_row(i);
    std::vector<Scalar> v(L.dim());
    for (std::size_t k = 0; k < pair.p.dim(); ++k)
      if (!c[k].is_zero()) v = add_vec(v, scale_vec(c[k], pair.p.basis_row(k)));
    rows.push_back(std::move(v));
  }
  Subspace perp = Subspace::span(rows, L.dim());
  return perp == centralizer(pair.p, {x});
}

/// Seeded search for a nonzero semisimple element of sub. Used only where
/// theory predicts generic success; absence after the sample budget is a
/// diagnostic, never a proof.
inline std::optional<Element> semisimple_witness(const SymmetricPair& pair,
                                                 const Subspace& sub, Rng rng,
                                                 std::size_t samples) {
  if (sub.dim() == 0) return std::nullopt;
  const LieAlgebra& L = pair.alg();
  for (std::size_t trial = 0; trial < samples; ++trial) {
    Element x = Element::zero(L);
    for (std::size_t j = 0; j < sub.dim(); ++j)
      x = x + rng.small_int() * Element(L, sub.basis_row(j));
    if (!x.is_zero() && is_semisimple_element(x)) return x;
  }
  return std::nullopt;
}

/// Per-representative verdicts. Aggregate flags are recomputed from the
/// stored sub-verdicts, never cached.
struct RepCriteria {
  std::string label;
  bool in_np = false;
  std::size_t orbit_dim = 0;
  bool principal = false;
  bool even = false;
  bool minus1_centralizer = false;
  bool minus1_grading = false;
  std::optional<bool> minus1_even;
  bool noticed = false;
  bool perp_identity = false;
  bool levi_instance = false;
  bool a_cap_gs_zero = false;
  bool self_dual_dims = false;       // dim [k,e] + dim p^e = dim p
  bool px_nilpotent_sampling = true; // p^e samples nilpotent when the centralizer criterion holds
  std::optional<std::string> ps_witness;
  bool witness_consistent = false;
  bool matches_expected = true;

  bool criteria_agree() const {
    bool agree = minus1_centralizer == minus1_grading;
    if (minus1_even.has_value()) agree = agree && *minus1_even == minus1_centralizer;
    return agree;
  }
  bool ok() const {
    bool principal_part = !principal || (even && minus1_centralizer && minus1_grading &&
                                         minus1_even.value_or(false) && a_cap_gs_zero);
    return in_np && criteria_agree() && perp_identity && levi_instance &&
           self_dual_dims && px_nilpotent_sampling && witness_consistent &&
           matches_expected && principal_part;
  }
};

struct PairCriteria {
  std::string id;
  std::vector<RepCriteria> reps;
  bool chamber_identities = false;
  bool perp_random = false;  // identity on seeded random elements of p
  // Theorem-level rollups over the principal representatives.
  bool theorem_null_p = true;
  bool theorem_equality = true;
  bool theorem_derived = true;

  bool pass() const {
    if (!chamber_identities || !perp_random) return false;
    if (!theorem_null_p || !theorem_equality || !theorem_derived) return false;
    for (const RepCriteria& r : reps)
      if (!r.ok()) return false;
    return true;
  }
};

struct CheckConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
};

/// Full battery for one element of N(p). `expected` may be null (user input).
inline RepCriteria run_battery(const PairContext& ctx, const std::string& label,
                               const Element& e, const ExpectedFlags* expected,
                               const CheckConfig& cfg) {
  const SymmetricPair& pair = ctx.pair;
  const LieAlgebra& L = pair.alg();
  const std::string& id = ctx.entry().id;
  RepCriteria rep;
  rep.label = label;
  rep.in_np = is_in_Np(pair, e);
  if (!rep.in_np || e.is_zero()) return rep;

  rep.orbit_dim = orbit_dimension(pair, e);
  rep.principal = is_principal(pair, ctx.cartan.r, e);

  NormalizedTriple triple = complete_normalized_triple(pair, e);
  HGrading grading = grading_by_h(pair, triple.h);
  TripleCentralizers cents = triple_centralizers(pair, triple);

  rep.even = is_even(grading);
  rep.minus1_centralizer = minus1_via_centralizer(cents);
  rep.minus1_grading = minus1_via_grading(pair, grading);
  rep.minus1_even = minus1_via_even(pair, grading);
  rep.noticed = is_noticed(cents);
  rep.perp_identity = perp_identity_check(pair, e);
  rep.levi_instance =
      levi_instance_check(pair, e, triple, grading,
                          Rng::scoped(cfg.seed, id, "levi_nilpotency/" + label),
                          cfg.samples);
  rep.a_cap_gs_zero = intersect(ctx.cartan.a, cents.g_s).dim() == 0;

  Subspace p_e = centralizer(pair.p, {e});
  rep.self_dual_dims =
      detail::bracket_k_x(pair, e).dim() + p_e.dim() == pair.p.dim();

  if (rep.minus1_centralizer) {
    rep.px_nilpotent_sampling = true;
    Rng rng = Rng::scoped(cfg.seed, id, "px_nilpotent/" + label);
    for (std::size_t trial = 0; trial < cfg.samples; ++trial) {
      Element x = Element::zero(L);
      for (std::size_t j = 0; j < p_e.dim(); ++j)
        x = x + rng.small_int() * Element(L, p_e.basis_row(j));
      if (!is_nilpotent_element(x)) {
        rep.px_nilpotent_sampling = false;
        break;
      }
    }
    rep.witness_consistent = cents.p_s.dim() == 0;
  } else {
    auto witness = semisimple_witness(pair, cents.p_s,
                                      Rng::scoped(cfg.seed, id, "ps_witness/" + label),
                                      cfg.samples);
    if (witness) {
      if (L.has_realization()) {
        const Matrix m = L.matrix_of_coords(witness->coords);
        std::string s = "[";
        for (std::size_t i = 0; i < m.rows(); ++i) {
          s += i ? ",[" : "[";
          for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? "," : "") + format_scalar(m.at(i, j));
          s += "]";
        }
        rep.ps_witness = s + "]";
      } else {
        std::string s;
        for (std::size_t j = 0; j < L.dim(); ++j)
          s += (j ? "," : "") + format_scalar(witness->coords[j]);
        rep.ps_witness = "coords(" + s + ")";
      }
    }
    rep.witness_consistent = witness.has_value();
  }

  if (expected) {
    rep.matches_expected =
        rep.principal == expected->principal && rep.minus1_centralizer == expected->minus1 &&
        rep.noticed == expected->noticed && rep.even == expected->even &&
        rep.orbit_dim == expected->orbit_dim;
  }
  return rep;
}

/// Runs every stored representative through the battery and aggregates the
/// theorem-level verdicts.
inline PairCriteria verify_pair(const PairContext& ctx, const CheckConfig& cfg) {
  PairCriteria out;
  out.id = ctx.entry().id;
  out.chamber_identities = ctx.chamber_identities;

  for (const Representative& rep : ctx.entry().representatives)
    out.reps.push_back(run_battery(ctx, rep.label, rep.element, &rep.expected, cfg));

  out.theorem_null_p = out.theorem_equality = out.theorem_derived = true;
  for (const RepCriteria& r : out.reps) {
    if (!r.principal) continue;
    out.theorem_null_p = out.theorem_null_p && r.minus1_centralizer;
    out.theorem_equality = out.theorem_equality && r.minus1_grading;
    out.theorem_derived = out.theorem_derived && r.even && r.minus1_even.value_or(false);
  }

  Rng rng = Rng::scoped(cfg.seed, out.id, "perp_random");
  out.perp_random = true;
  const LieAlgebra& L = ctx.alg();
  for (std::size_t trial = 0; trial < 20; ++trial) {
    Element x = Element::zero(L);
    for (std::size_t j = 0; j < ctx.pair.p.dim(); ++j)
      x = x + rng.small_int() * Element(L, ctx.pair.p.basis_row(j));
    if (!perp_identity_check(ctx.pair, x)) {
      out.perp_random = false;
      break;
    }
  }
  return out;
}

}  // namespace symcheck
