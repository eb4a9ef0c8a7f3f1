// ============================================================================
// acceptance_main.cpp
// End-to-end acceptance harness for the symcheck verification engine.
//
// Runs the nine acceptance criteria against the built-in catalog and prints
// one PASS/FAIL line per criterion. Every comparison is exact; there are no
// tolerances anywhere. Exit code: 0 iff all criteria pass.
// ============================================================================

#include "symcheck/report.hpp"

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace symcheck;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

void criterion(int n, const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << name << "\n";
  if (!ok) ++g_failures;
}

void detail(const std::string& line) { g_detail << "      " << line << "\n"; }

const PairContext& ctx_for(const std::string& id) {
  static std::map<std::string, PairContext> cache;
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, analyze_structure(catalog_entry(id))).first;
  return it->second;
}

const PairCriteria& criteria_for(const std::string& id) {
  static std::map<std::string, PairCriteria> cache;
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, verify_pair(ctx_for(id), CheckConfig{0, 100})).first;
  return it->second;
}

Matrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    for (const auto& s : row) r.push_back(parse_scalar(s));
    out.push_back(std::move(r));
  }
  return Matrix::from_rows(out);
}

// --------------------------------------------------------------------------
// 1. Structural golden numbers.
// --------------------------------------------------------------------------
bool criterion1() {
  struct Golden {
    const char* id;
    std::size_t g, k, p, r;
  };
  const Golden golden[] = {{"sl2-AI", 3, 1, 2, 1},
                           {"sl2xsl2-diag", 6, 3, 3, 1},
                           {"sl3-AI", 8, 3, 5, 2},
                           {"sl2-AIII", 3, 1, 2, 1},
                           {"sl3-AIII12", 8, 4, 4, 1}};
  bool ok = true;
  for (const Golden& g : golden) {
    const PairContext& ctx = ctx_for(g.id);
    bool here = ctx.alg().dim() == g.g && ctx.pair.k.dim() == g.k &&
                ctx.pair.p.dim() == g.p && ctx.cartan.r == g.r;
    if (!here) detail(std::string(g.id) + ": dimension mismatch");
    ok = ok && here;
  }
  // the rank-one sl3 pair is non-reduced with multiplicities {1: 2, 2: 1}
  const RestrictedRootData& roots = ctx_for("sl3-AIII12").roots;
  bool bc = !roots.reduced && roots.positives.size() == 2;
  std::map<std::string, std::size_t> mult;
  for (std::size_t idx : roots.positives)
    mult[format_scalar(roots.roots[idx].alpha[0])] = roots.roots[idx].multiplicity();
  bc = bc && mult["1"] == 2 && mult["2"] == 1;
  if (!bc) detail("sl3-AIII12 root multiplicities are wrong");
  return ok && bc;
}

// --------------------------------------------------------------------------
// 2. Principal representatives satisfy every criterion, are even, and sit in
//    orbits of dimension dim p - r.
// --------------------------------------------------------------------------
bool criterion2() {
  const std::map<std::string, std::size_t> orbit_dims = {{"sl2-AI", 1},
                                                         {"sl2xsl2-diag", 2},
                                                         {"sl3-AI", 3},
                                                         {"sl2-AIII", 1},
                                                         {"sl3-AIII12", 3}};
  bool ok = true;
  for (const auto& [id, expected_dim] : orbit_dims) {
    const PairContext& ctx = ctx_for(id);
    const PairCriteria& crit = criteria_for(id);
    for (const RepCriteria& rep : crit.reps) {
      if (!rep.principal) continue;
      bool here = rep.minus1_centralizer && rep.minus1_grading &&
                  rep.minus1_even.value_or(false) && rep.criteria_agree() &&
                  rep.even && rep.orbit_dim == expected_dim &&
                  rep.orbit_dim == ctx.pair.p.dim() - ctx.cartan.r;
      if (!here) detail(id + "/" + rep.label + ": principal battery failed");
      ok = ok && here;
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 3. The defined criteria agree pairwise on every representative; the
//    subregular orbit exhibits an explicit semisimple witness in p^s.
// --------------------------------------------------------------------------
bool criterion3() {
  bool ok = true;
  for (const std::string& id : catalog_ids())
    for (const RepCriteria& rep : criteria_for(id).reps) {
      if (!rep.criteria_agree()) {
        detail(id + "/" + rep.label + ": criteria disagree");
        ok = false;
      }
      if (!rep.witness_consistent) {
        detail(id + "/" + rep.label + ": witness bookkeeping failed");
        ok = false;
      }
    }

  const PairContext& ctx = ctx_for("sl3-AI");
  const Element& sub = ctx.entry().representatives[1].element;
  NormalizedTriple t = complete_normalized_triple(ctx.pair, sub);
  TripleCentralizers cents = triple_centralizers(ctx.pair, t);
  Element t_witness = element_from_matrix(
      ctx.alg(), mat({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-2"}}));
  bool sub_ok = !criteria_for("sl3-AI").reps[1].principal &&
                !criteria_for("sl3-AI").reps[1].minus1_centralizer &&
                cents.p_s == Subspace::span({t_witness.coords}, 8);
  auto witness =
      semisimple_witness(ctx.pair, cents.p_s, Rng::scoped(0, "sl3-AI", "w"), 100);
  sub_ok = sub_ok && witness.has_value() && !witness->is_zero() &&
           is_semisimple_element(*witness) && cents.p_s.contains(witness->coords);
  if (!sub_ok) detail("sl3-AI subregular witness chain failed");
  return ok && sub_ok;
}

// --------------------------------------------------------------------------
// 4. Killing-perp identity for every representative and for twenty seeded
//    random elements of p per pair.
// --------------------------------------------------------------------------
bool criterion4() {
  bool ok = true;
  for (const std::string& id : catalog_ids()) {
    const PairContext& ctx = ctx_for(id);
    for (const Representative& rep : ctx.entry().representatives)
      if (!perp_identity_check(ctx.pair, rep.element)) {
        detail(id + "/" + rep.label + ": perp identity failed");
        ok = false;
      }
    Rng rng = Rng::scoped(0, id, "perp_random");
    for (int trial = 0; trial < 20; ++trial) {
      Element x = Element::zero(ctx.alg());
      for (std::size_t j = 0; j < ctx.pair.p.dim(); ++j)
        x = x + rng.small_int() * Element(ctx.alg(), ctx.pair.p.basis_row(j));
      if (!perp_identity_check(ctx.pair, x)) {
        detail(id + ": perp identity failed on a random element");
        ok = false;
      }
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 5. Chamber element: existence, uniqueness-by-construction, centralizer
//    identities, and the concrete classical values.
// --------------------------------------------------------------------------
bool criterion5() {
  bool ok = true;
  for (const std::string& id : catalog_ids())
    if (!ctx_for(id).chamber_identities) {
      detail(id + ": chamber identities failed");
      ok = false;
    }
  auto chamber_matrix = [&](const std::string& id) {
    const PairContext& ctx = ctx_for(id);
    return ctx.alg().matrix_of_coords(ctx.chamber.coords);
  };
  bool values = chamber_matrix("sl2-AI") == mat({{"0", "1"}, {"1", "0"}}) &&
                chamber_matrix("sl3-AI") ==
                    mat({{"2", "0", "0"}, {"0", "0", "0"}, {"0", "0", "-2"}}) &&
                chamber_matrix("sl3-AIII12") ==
                    mat({{"0", "2", "0"}, {"2", "0", "0"}, {"0", "0", "0"}});
  if (!values) detail("concrete chamber values mismatch");
  return ok && values;
}

// --------------------------------------------------------------------------
// 6. Diagonal-pair reduction: the swap pair's verdict equals the
//    distinguishedness of e in sl2 computed independently as dim g_0 = dim g_2.
// --------------------------------------------------------------------------
bool criterion6() {
  // independent oracle, no symmetric-pair machinery: grade sl2 by ad h
  LieAlgebra sl2 = build_sl(2);
  EigenDecomposition eig = integer_eigenvalues(ad_matrix(Element::basis(sl2, 2)), true);
  std::size_t dim_g0 = 0, dim_g2 = 0;
  for (const auto& [lambda, space] : eig.spaces) {
    if (lambda == Scalar(0)) dim_g0 = space.dim();
    if (lambda == Scalar(2)) dim_g2 = space.dim();
  }
  bool oracle = (dim_g0 == dim_g2) && dim_g0 == 1;
  bool pair_verdict = criteria_for("sl2xsl2-diag").reps[0].minus1_centralizer;
  if (oracle != pair_verdict) detail("reduction oracle disagrees with the swap pair");
  return oracle == pair_verdict && oracle;
}

// --------------------------------------------------------------------------
// 7. Cayley transforms and compactness under both conventions.
// --------------------------------------------------------------------------
bool criterion7() {
  bool ok = true;
  for (const char* id : {"sl2-AI", "sl3-AI", "sl2-AIII", "sl3-AIII12"}) {
    KsPairOutcome out = verify_ks_compact(ctx_for(id), Convention::adjusted);
    if (!out.available || !out.ok) {
      detail(std::string(id) + ": adjusted-convention compactness suite failed");
      ok = false;
      continue;
    }
    for (const KsRepOutcome& o : out.reps)
      if (!o.cayley_found || !o.matches) {
        detail(std::string(id) + "/" + o.label + ": compactness mismatch");
        ok = false;
      }
  }

  // concrete values: the principal sl2-AI real triple and its trivial
  // centralizer
  RealFormContext rf = make_real_form_context(ctx_for("sl2-AI").pair);
  NormalizedTriple t1 = complete_normalized_triple(
      ctx_for("sl2-AI").pair, ctx_for("sl2-AI").entry().representatives[0].element);
  RealTriple rt1 = cayley_real_from_complex(rf, t1, Convention::adjusted);
  const LieAlgebra& L1 = ctx_for("sl2-AI").alg();
  bool p1_values = L1.matrix_of_coords(rt1.e.coords) == mat({{"0", "0"}, {"1", "0"}}) &&
                   L1.matrix_of_coords(rt1.h.coords) == mat({{"-1", "0"}, {"0", "1"}}) &&
                   L1.matrix_of_coords(rt1.f.coords) == mat({{"0", "1"}, {"0", "0"}}) &&
                   is_compact_element(rf, rt1).z_real.dim() == 0;
  if (!p1_values) detail("sl2-AI principal real triple mismatch");
  ok = ok && p1_values;

  // round-trip inversion is exact on every adjusted-convention triple
  for (const char* id : {"sl2-AI", "sl3-AI", "sl2-AIII", "sl3-AIII12"}) {
    RealFormContext ctx = make_real_form_context(ctx_for(id).pair);
    for (const Representative& rep : ctx_for(id).entry().representatives) {
      NormalizedTriple t = complete_normalized_triple(ctx_for(id).pair, rep.element);
      auto lambda = find_cayley_scaling(ctx, t, Convention::adjusted);
      if (!lambda) {
        detail(std::string(id) + "/" + rep.label + ": no adjusted scaling");
        ok = false;
        continue;
      }
      NormalizedTriple scaled{*lambda * t.e, t.h, lambda->inverse() * t.f, t.s};
      RealTriple rt = cayley_real_from_complex(ctx, scaled, Convention::adjusted);
      NormalizedTriple back = cayley_complex_from_real(ctx, rt, Convention::adjusted);
      if (!(back.e == scaled.e && back.h == scaled.h && back.f == scaled.f)) {
        detail(std::string(id) + "/" + rep.label + ": round trip failed");
        ok = false;
      }
    }
  }

  // subregular witness of non-compactness: z-Gram (36)
  KsPairOutcome p3 = verify_ks_compact(ctx_for("sl3-AI"), Convention::adjusted);
  bool gram_ok = p3.reps.size() == 2 && !p3.reps[1].compact &&
                 p3.reps[1].z_dim == 1 && p3.reps[1].z_gram.size() == 1 &&
                 p3.reps[1].z_gram[0] == "[36]";
  if (!gram_ok) detail("sl3-AI subregular z-Gram is not [[36]]");
  ok = ok && gram_ok;

  // paper convention: the probe reports unsatisfiability and the run exits 1
  RunConfig paper_cfg;
  paper_cfg.pairs = {"sl2-AI"};
  paper_cfg.convention = Convention::paper;
  Report paper = run_verification(paper_cfg);
  bool paper_ok = report_exit_code(paper) == 1 && !paper.pairs[0].ks.ok &&
                  !paper.pairs[0].ks.reps[0].cayley_found &&
                  paper.pairs[0].ks.reps[0].note.find(
                      "no Cayley representative found") != std::string::npos;
  if (!paper_ok) detail("paper-convention probe did not fail as documented");
  return ok && paper_ok;
}

// --------------------------------------------------------------------------
// 8. Randomized invariants at seed 0, 100 samples per check.
// --------------------------------------------------------------------------
bool criterion8() {
  bool ok = true;
  auto fail = [&](const std::string& what) {
    detail(what);
    ok = false;
  };

  {  // kernel-rank identity
    Rng rng = Rng::scoped(0, "global", "kernel_rank");
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t r = 1 + rng.next() % 5;
      std::size_t c = 1 + rng.next() % 5;
      Matrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.small_int();
      if (rref(m).rank + kernel(m).dim() != c) fail("kernel-rank identity failed");
    }
  }
  {  // Grassmann identity
    Rng rng = Rng::scoped(0, "global", "grassmann");
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t n = 2 + rng.next() % 4;
      auto rand_space = [&] {
        std::size_t rows = 1 + rng.next() % n;
        Matrix m(rows, n);
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.small_int();
        return Subspace::from_rows(m);
      };
      Subspace a = rand_space();
      Subspace b = rand_space();
      if (a.dim() + b.dim() != sum(a, b).dim() + intersect(a, b).dim())
        fail("grassmann identity failed");
    }
  }
  for (const std::string& id : catalog_ids()) {
    const PairContext& ctx = ctx_for(id);
    const LieAlgebra& L = ctx.alg();
    // Killing associativity and theta invariance on all basis pairs/triples
    for (std::size_t i = 0; i < L.dim() && ok; ++i)
      for (std::size_t j = 0; j < L.dim() && ok; ++j) {
        Element x = Element::basis(L, i);
        Element y = Element::basis(L, j);
        if (killing(ctx.pair.theta(x), ctx.pair.theta(y)) != killing(x, y))
          fail(id + ": Killing form is not theta invariant");
        for (std::size_t k = 0; k < L.dim() && ok; ++k) {
          Element z = Element::basis(L, k);
          if (killing(bracket(x, y), z) != killing(x, bracket(y, z)))
            fail(id + ": Killing associativity failed");
        }
      }
    for (const Representative& rep : ctx.entry().representatives) {
      NormalizedTriple t = complete_normalized_triple(ctx.pair, rep.element);
      HGrading g = grading_by_h(ctx.pair, t.h);
      std::size_t n = L.dim();
      for (auto& [d, space] : g.parts) {
        if (space.dim() != g.part(-d, n).dim() ||
            g.part_k(d, n).dim() != g.part_k(-d, n).dim() ||
            g.part_p(d, n).dim() != g.part_p(-d, n).dim())
          fail(id + ": grading symmetry failed");
      }
      for (auto& [d1, s1] : g.parts)
        for (auto& [d2, s2] : g.parts)
          for (std::size_t i = 0; i < s1.dim(); ++i)
            for (std::size_t j = 0; j < s2.dim(); ++j) {
              Element x(L, s1.basis_row(i));
              Element y(L, s2.basis_row(j));
              if (!g.part(d1 + d2, n).contains(bracket(x, y).coords))
                fail(id + ": graded bracket inclusion failed");
            }
      if (!levi_instance_check(ctx.pair, rep.element, t, g,
                               Rng::scoped(0, id, "levi_nilpotency/" + rep.label),
                               100))
        fail(id + "/" + rep.label + ": positive-part nilpotency sampling failed");
      TripleCentralizers cents = triple_centralizers(ctx.pair, t);
      auto witness = semisimple_witness(
          ctx.pair, cents.p_s, Rng::scoped(0, id, "ps_witness/" + rep.label), 100);
      if ((cents.p_s.dim() != 0) != witness.has_value())
        fail(id + "/" + rep.label + ": witness search inconsistent with p^s");
    }
  }
  return ok;
}

// --------------------------------------------------------------------------
// 9. Determinism: byte-identical JSON reports across consecutive runs and
//    across parallel scheduling.
// --------------------------------------------------------------------------
bool criterion9() {
  RunConfig cfg;
  cfg.pairs = catalog_ids();
  cfg.format = RunConfig::Format::json;
  std::string first = render_report(run_verification(cfg));
  std::string second = render_report(run_verification(cfg));
  cfg.parallel = true;
  std::string parallel = render_report(run_verification(cfg));
  bool ok = first == second && first == parallel;
  if (!ok) detail("reports differ across runs or scheduling");
  return ok;
}

}  // namespace

int main() {
  std::cout << "symcheck acceptance suite (seed 0, 100 samples, exact comparisons)\n";
  criterion(1, "structural golden numbers", criterion1());
  criterion(2, "principal representatives satisfy all criteria", criterion2());
  criterion(3, "criteria equivalence incl. subregular witness", criterion3());
  criterion(4, "killing-perp identity suite", criterion4());
  criterion(5, "chamber element and centralizer identities", criterion5());
  criterion(6, "diagonal-pair reduction cross-check", criterion6());
  criterion(7, "cayley transforms and compactness equivalence", criterion7());
  criterion(8, "randomized invariant suites", criterion8());
  criterion(9, "deterministic byte-identical reports", criterion9());
  std::string notes = g_detail.str();
  if (!notes.empty()) std::cout << notes;
  std::cout << (g_failures == 0 ? "all criteria passed\n"
                                : std::to_string(g_failures) + " criteria failed\n");
  return g_failures == 0 ? 0 : 1;
}
