#pragma once

#include "symcheck/criteria.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symcheck {

/// Sign convention for the complex/real Cayley-triple conditions and the
/// transform between them. `paper` is the pair (sigma(e) = -f, theta(e') = f');
/// `adjusted` is (sigma(e) = f, theta(e') = -f'), which is the convention the
/// catalog orbits actually satisfy. Both ship; reports record which one ran.
enum class Convention { paper, adjusted };

inline std::string convention_name(Convention c) {
  return c == Convention::paper ? "paper" : "adjusted";
}

/// Real-form data in usable form: change of basis to the declared real basis
/// plus the validated Cartan-decomposition facts.
struct RealFormContext {
  const SymmetricPair* pair = nullptr;
  Matrix real_basis;  // rows: real basis over algebra coordinates
  Matrix to_real;     // coords over the real basis = to_real * coords
  Matrix killing_real;  // Killing Gram over the real basis
  Subspace k_real;    // theta-fixed part, in real-basis coordinates
  Subspace p_real;

  const LieAlgebra& alg() const { return pair->alg(); }

  std::vector<Scalar> real_coords(const Element& x) const {
    return to_real.mul_vec(x.coords);
  }
  bool has_real_coords(const Element& x) const {
    for (const Scalar& c : real_coords(x))
      if (!c.is_real()) return false;
    return true;
  }
};

/// Builds and validates the context: real structure constants, theta
/// stability, and definiteness of the Killing form on the two halves.
inline RealFormContext make_real_form_context(const SymmetricPair& pair) {
  const CatalogEntry& entry = *pair.entry;
  if (!entry.real_form)
    throw std::invalid_argument("pair " + entry.id + " has no real form");
  const LieAlgebra& L = entry.alg();
  std::size_t n = L.dim();

  RealFormContext ctx;
  ctx.pair = &pair;
  ctx.real_basis = entry.real_form->basis;
  if (rref(ctx.real_basis).rank != n)
    throw InternalError("declared real basis is not a basis");
  ctx.to_real = matrix_inverse(ctx.real_basis.transpose());

  // Structure constants over the real basis must be purely real.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Element bi(L, ctx.real_basis.row(i));
      Element bj(L, ctx.real_basis.row(j));
      for (const Scalar& c : ctx.to_real.mul_vec(bracket(bi, bj).coords))
        if (!c.is_real())
          throw InternalError("real form of " + entry.id +
                              " has non-real structure constants");
    }

  // theta expressed over the real basis must be real; this is sigma-theta
  // commutation.
  Matrix theta_real = ctx.to_real * (entry.theta * ctx.real_basis.transpose());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!theta_real.at(i, j).is_real())
        throw InternalError("theta does not preserve the real form of " + entry.id);

  ctx.killing_real = ctx.real_basis * L.killing_gram() * ctx.real_basis.transpose();
  ctx.k_real = kernel(theta_real - Matrix::identity(n));
  ctx.p_real = kernel(theta_real + Matrix::identity(n));
  auto gram_on = [&](const Subspace& s) {
    Matrix g(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j) {
        Scalar acc;
        std::vector<Scalar> ri = s.basis_row(i);
        std::vector<Scalar> rj = s.basis_row(j);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (!ri[a].is_zero() && !rj[b].is_zero())
              acc += ri[a] * ctx.killing_real.at(a, b) * rj[b];
        g.at(i, j) = acc;
      }
    return g;
  };
  if (!is_negative_definite(gram_on(ctx.k_real)))
    throw InternalError("Killing form not negative definite on k_R of " + entry.id);
  if (!is_positive_definite(gram_on(ctx.p_real)))
    throw InternalError("Killing form not positive definite on p_R of " + entry.id);
  return ctx;
}

/// Coordinatewise conjugation over the declared real basis; conjugate-linear
/// automorphism with fixed algebra g_R.
inline Element sigma(const RealFormContext& ctx, const Element& x) {
  std::vector<Scalar> c = ctx.real_coords(x);
  for (Scalar& s : c) s = s.conj();
  return Element(ctx.alg(), ctx.real_basis.transpose().mul_vec(c));
}

/// Complex Cayley condition, including the forced companion identities
/// sigma(h) = -h and sigma(f) = -+e.
inline bool is_complex_cayley(const RealFormContext& ctx, const NormalizedTriple& t,
                              Convention conv) {
  Element se = sigma(ctx, t.e);
  Element sf = sigma(ctx, t.f);
  bool main = (conv == Convention::paper) ? (se == -t.f) : (se == t.f);
  bool companion = (conv == Convention::paper) ? (sf == -t.e) : (sf == t.e);
  return main && companion && sigma(ctx, t.h) == -t.h;
}

/// sl2-triple inside g_R (all coordinates real over the declared basis).
struct RealTriple {
  Element e, h, f;
  std::vector<Element> elements() const { return {e, h, f}; }
};

inline RealTriple cayley_real_from_complex(const RealFormContext& ctx,
                                           const NormalizedTriple& t, Convention conv) {
  if (!is_complex_cayley(ctx, t, conv))
    throw std::invalid_argument("not a Cayley triple under the " +
                                convention_name(conv) + " convention");
  Scalar i = Scalar::unit_i();
  Scalar half = rational_scalar(1, 2);
  RealTriple rt{Element::zero(ctx.alg()), Element::zero(ctx.alg()),
                Element::zero(ctx.alg())};
  if (conv == Convention::paper) {
    rt.e = (half * i) * (t.e + t.f - t.h);
    rt.h = t.e - t.f;
    rt.f = (-half * i) * (t.e + t.f + t.h);
  } else {
    rt.e = half * (t.e + t.f + i * t.h);
    rt.h = i * (t.e - t.f);
    rt.f = half * (t.e + t.f - i * t.h);
  }
  for (const Element& x : rt.elements())
    if (!ctx.has_real_coords(x))
      throw InternalError("Cayley transform produced non-real output");
  if (bracket(rt.h, rt.e) != Scalar(2) * rt.e ||
      bracket(rt.h, rt.f) != Scalar(-2) * rt.f || bracket(rt.e, rt.f) != rt.h)
    throw InternalError("Cayley transform broke the sl2 relations");
  const SymmetricPair& pair = *ctx.pair;
  bool real_cond = (conv == Convention::paper)
                       ? pair.theta(rt.e) == rt.f
                       : (pair.theta(rt.e) == -rt.f && pair.theta(rt.h) == -rt.h);
  if (!real_cond) throw InternalError("Cayley transform broke the real condition");
  return rt;
}

inline NormalizedTriple cayley_complex_from_real(const RealFormContext& ctx,
                                                 const RealTriple& rt, Convention conv) {
  for (const Element& x : rt.elements())
    if (!ctx.has_real_coords(x))
      throw std::invalid_argument("triple does not lie in the real form");
  if (bracket(rt.h, rt.e) != Scalar(2) * rt.e ||
      bracket(rt.h, rt.f) != Scalar(-2) * rt.f || bracket(rt.e, rt.f) != rt.h)
    throw std::invalid_argument("not an sl2 triple");
  const SymmetricPair& pair = *ctx.pair;
  bool real_cond = (conv == Convention::paper)
                       ? pair.theta(rt.e) == rt.f
                       : (pair.theta(rt.e) == -rt.f && pair.theta(rt.h) == -rt.h);
  if (!real_cond)
    throw std::invalid_argument("real Cayley condition fails under the " +
                                convention_name(conv) + " convention");

  Scalar i = Scalar::unit_i();
  Scalar half = rational_scalar(1, 2);
  Element e = Element::zero(ctx.alg());
  Element h = Element::zero(ctx.alg());
  Element f = Element::zero(ctx.alg());
  if (conv == Convention::paper) {
    h = i * (rt.e + rt.f);
    e = half * (rt.h - i * (rt.e - rt.f));
    f = half * (-rt.h - i * (rt.e - rt.f));
  } else {
    e = half * (rt.e + rt.f - i * rt.h);
    h = -i * (rt.e - rt.f);
    f = half * (rt.e + rt.f + i * rt.h);
  }
  if (bracket(h, e) != Scalar(2) * e || bracket(h, f) != Scalar(-2) * f ||
      bracket(e, f) != h)
    throw InternalError("inverse Cayley transform broke the sl2 relations");
  if (!pair.k.contains(h.coords) || !pair.p.contains(e.coords) ||
      !pair.p.contains(f.coords))
    throw InternalError("inverse Cayley transform is not normalized");
  NormalizedTriple t{e, h, f,
                     Subspace::span({e.coords, h.coords, f.coords}, ctx.alg().dim())};
  if (!is_complex_cayley(ctx, t, conv))
    throw InternalError("inverse Cayley transform broke the complex condition");
  return t;
}

struct CompactnessResult {
  Subspace z_real;  // triple centralizer in g_R, real-basis coordinates
  Matrix gram;      // ambient Killing form restricted to z
  bool compact = false;
};

/// Compactness of the real orbit representative: the centralizer of the real
/// triple inside g_R carries a negative definite Killing form. For sl2-triple
/// centralizers this centralizer is reductive, so the ambient restriction is
/// the operative test.
inline CompactnessResult is_compact_element(const RealFormContext& ctx,
                                            const RealTriple& rt) {
  std::size_t n = ctx.alg().dim();
  Matrix stacked(0, n);
  for (const Element& t : rt.elements()) {
    // ad over real-basis coordinates; entries are real by construction.
    Matrix ad_real = ctx.to_real * (ad_matrix(t) * ctx.real_basis.transpose());
    stacked = vstack(stacked, ad_real);
  }
  CompactnessResult out;
  out.z_real = kernel(stacked);
  out.gram = Matrix(out.z_real.dim(), out.z_real.dim());
  for (std::size_t i = 0; i < out.z_real.dim(); ++i)
    for (std::size_t j = 0; j < out.z_real.dim(); ++j) {
      Scalar acc;
      std::vector<Scalar> ri = out.z_real.basis_row(i);
      std::vector<Scalar> rj = out.z_real.basis_row(j);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!ri[a].is_zero() && !rj[b].is_zero())
            acc += ri[a] * ctx.killing_real.at(a, b) * rj[b];
      out.gram.at(i, j) = acc;
    }
  out.compact = is_negative_definite(out.gram);
  return out;
}

namespace detail {
/// Solves lambda * conj(lambda) = q over the Gaussian rationals: with
/// q = num/den in lowest terms, lambda = (x + y i)/den needs
/// x^2 + y^2 = num * den. Returns the solution with the largest x >= 0,
/// so rational q squares yield a plain rational lambda.
inline std::optional<Scalar> solve_norm_equation(const Rational& q) {
  if (q <= 0) return std::nullopt;
  Integer target = numerator(q) * denominator(q);
  if (target > 1000000000) return std::nullopt;  // out of desk-scale range
  Integer x = detail::ceil_isqrt(target);
  if (x * x > target) --x;
  for (; x >= 0; --x) {
    Integer rest = target - x * x;
    Integer y = detail::ceil_isqrt(rest);
    if (y * y == rest)
      return Scalar{Rational(x) / Rational(denominator(q)),
                    Rational(y) / Rational(denominator(q))};
  }
  return std::nullopt;
}
}  // namespace detail

/// Searches the scalings (lambda e, h, lambda^{-1} f) of a normalized triple
/// for one satisfying the convention's complex Cayley condition. The four
/// quarter-turn scalings are probed first; they cannot change the condition,
/// so a ratio step follows: when sigma(e) = rho f with rho a rational of the
/// right sign, the norm equation |lambda|^2 = +-1/rho is solved exactly.
inline std::optional<Scalar> find_cayley_scaling(const RealFormContext& ctx,
                                                 const NormalizedTriple& t,
                                                 Convention conv) {
  const Scalar quarter_turns[4] = {Scalar(1), Scalar::unit_i(), Scalar(-1),
                                   -Scalar::unit_i()};
  for (const Scalar& lambda : quarter_turns) {
    NormalizedTriple scaled{lambda * t.e, t.h, lambda.inverse() * t.f, t.s};
    if (is_complex_cayley(ctx, scaled, conv)) return lambda;
  }
  if (sigma(ctx, t.h) != -t.h) return std::nullopt;
  Element se = sigma(ctx, t.e);
  // Proportionality sigma(e) = rho f.
  std::size_t j = 0;
  while (j < t.f.coords.size() && t.f.coords[j].is_zero()) ++j;
  if (j == t.f.coords.size()) return std::nullopt;
  Scalar rho = se.coords[j] / t.f.coords[j];
  if (se != rho * t.f || !rho.is_real() || rho.re == 0) return std::nullopt;
  Rational target = (conv == Convention::paper) ? -Rational(1) / rho.re
                                                : Rational(1) / rho.re;
  auto lambda = detail::solve_norm_equation(target);
  if (!lambda) return std::nullopt;
  NormalizedTriple scaled{*lambda * t.e, t.h, lambda->inverse() * t.f, t.s};
  if (!is_complex_cayley(ctx, scaled, conv))
    throw InternalError("norm-equation scaling failed the Cayley condition");
  return lambda;
}

struct KsRepOutcome {
  std::string label;
  bool cayley_found = false;
  Scalar scaling;
  bool compact = false;
  bool minus1 = false;
  bool matches = false;  // compact <=> centralizer criterion
  std::size_t z_dim = 0;
  std::vector<std::string> z_gram;  // formatted rows
  std::optional<RealTriple> real_triple;
  std::string note;
};

struct KsPairOutcome {
  bool available = false;
  std::string reason;  // set when unavailable
  Convention convention = Convention::adjusted;
  std::vector<KsRepOutcome> reps;
  bool ok = true;
};

/// The compactness side of the orbit correspondence: for every stored
/// representative find a convention-compatible scaled triple, transform it to
/// g_R, decide compactness, and compare with the centralizer criterion.
inline KsPairOutcome verify_ks_compact(const PairContext& pctx, Convention conv) {
  KsPairOutcome out;
  out.convention = conv;
  if (!pctx.entry().real_form) {
    out.available = false;
    out.reason = "real form unavailable";
    return out;  // not a failure; there is nothing to check
  }
  out.available = true;
  RealFormContext ctx = make_real_form_context(pctx.pair);

  for (const Representative& rep : pctx.entry().representatives) {
    KsRepOutcome o;
    o.label = rep.label;
    NormalizedTriple t = complete_normalized_triple(pctx.pair, rep.element);
    o.minus1 = minus1_via_centralizer(triple_centralizers(pctx.pair, t));
    auto lambda = find_cayley_scaling(ctx, t, conv);
    if (!lambda) {
      o.cayley_found = false;
      o.note = "no Cayley representative found under the " + convention_name(conv) +
               " convention";
      out.ok = false;
      out.reps.push_back(std::move(o));
      continue;
    }
    o.cayley_found = true;
    o.scaling = *lambda;
    NormalizedTriple scaled{*lambda * t.e, t.h, lambda->inverse() * t.f, t.s};
    RealTriple rt = cayley_real_from_complex(ctx, scaled, conv);
    NormalizedTriple back = cayley_complex_from_real(ctx, rt, conv);
    if (back.e != scaled.e || back.h != scaled.h || back.f != scaled.f)
      throw InternalError("Cayley round trip is not the identity");
    CompactnessResult comp = is_compact_element(ctx, rt);
    o.compact = comp.compact;
    o.z_dim = comp.z_real.dim();
    for (std::size_t i = 0; i < comp.gram.rows(); ++i) {
      std::string row = "[";
      for (std::size_t j = 0; j < comp.gram.cols(); ++j)
        row += (j ? "," : "") + format_scalar(comp.gram.at(i, j));
      o.z_gram.push_back(row + "]");
    }
    o.real_triple = rt;
    o.matches = (o.compact == o.minus1);
    if (!o.matches) out.ok = false;
    out.reps.push_back(std::move(o));
  }
  return out;
}

}  // namespace symcheck
