#pragma once

#include "symcheck/cayley.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

namespace symcheck {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::vector<std::string> pairs;  // resolved ids, sorted
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  Convention convention = Convention::adjusted;
  enum class Format { json, markdown };
  Format format = Format::markdown;
  bool parallel = false;
};

/// Resolves a --pairs argument ("all" or comma-separated ids) to sorted ids.
inline std::vector<std::string> resolve_pair_ids(const std::string& arg) {
  if (arg.empty() || arg == "all") return catalog_ids();
  std::vector<std::string> ids;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    catalog_entry(tok);  // throws ParseError for unknown ids
    ids.push_back(tok);
  }
  if (ids.empty()) throw ParseError("no pair ids given");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

struct PairReport {
  std::string id;
  std::size_t dim_g = 0, dim_k = 0, dim_p = 0, rank = 0;
  std::size_t root_count = 0;
  bool reduced = true;
  std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> positive_mults;
  std::vector<std::string> chamber_coords;
  Json chamber_matrix;  // array of arrays of scalar strings, or null
  PairCriteria criteria;
  KsPairOutcome ks;
  bool pass = false;
};

struct Report {
  std::string version = kToolVersion;
  RunConfig config;
  std::vector<PairReport> pairs;
  bool pass = false;
};

namespace detail {

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json element_matrix_json(const LieAlgebra& L, const Element& x) {
  if (!L.has_realization()) return Json();
  return matrix_json(L.matrix_of_coords(x.coords));
}

}  // namespace detail

inline PairReport build_pair_report(const std::string& id, const RunConfig& cfg) {
  const CatalogEntry& entry = catalog_entry(id);
  PairContext ctx = analyze_structure(entry);
  PairReport rep;
  rep.id = id;
  rep.dim_g = ctx.alg().dim();
  rep.dim_k = ctx.pair.k.dim();
  rep.dim_p = ctx.pair.p.dim();
  rep.rank = ctx.cartan.r;
  rep.root_count = ctx.roots.roots.size();
  rep.reduced = ctx.roots.reduced;
  for (std::size_t idx : ctx.roots.positives) {
    std::vector<std::int64_t> coords;
    for (const Scalar& v : ctx.roots.roots[idx].alpha) coords.push_back(to_int64(v.re));
    rep.positive_mults.emplace_back(std::move(coords),
                                    ctx.roots.roots[idx].multiplicity());
  }
  for (const Scalar& c : ctx.chamber.coords)
    rep.chamber_coords.push_back(format_scalar(c));
  rep.chamber_matrix = detail::element_matrix_json(ctx.alg(), ctx.chamber);
  rep.criteria = verify_pair(ctx, CheckConfig{cfg.seed, cfg.samples});
  rep.ks = verify_ks_compact(ctx, cfg.convention);
  rep.pass = rep.criteria.pass() && (!rep.ks.available || rep.ks.ok);
  return rep;
}

/// Runs the selected pairs (possibly concurrently) and merges in sorted id
/// order, so output is identical with and without --parallel.
inline Report run_verification(const RunConfig& cfg) {
  Report report;
  report.config = cfg;
  if (cfg.parallel) {
    std::vector<std::future<PairReport>> futures;
    for (const std::string& id : cfg.pairs)
      futures.push_back(std::async(std::launch::async, build_pair_report, id, cfg));
    for (auto& f : futures) report.pairs.push_back(f.get());
  } else {
    for (const std::string& id : cfg.pairs)
      report.pairs.push_back(build_pair_report(id, cfg));
  }
  report.pass = true;
  for (const PairReport& p : report.pairs) report.pass = report.pass && p.pass;
  return report;
}

// ---------------------------------------------------------------------------
// Serialization. JSON keys are stable snake_case identifiers; markdown is
// generated from the same data.
// ---------------------------------------------------------------------------

inline Json report_json(const Report& report) {
  Json j;
  j["tool_version"] = report.version;
  // Only result-affecting settings are echoed; rendering and scheduling
  // options would break the byte-identity contract across --parallel runs.
  j["config"] = {{"pairs", report.config.pairs},
                 {"seed", report.config.seed},
                 {"samples", report.config.samples},
                 {"convention", convention_name(report.config.convention)}};
  Json pairs = Json::array();
  for (const PairReport& p : report.pairs) {
    Json jp;
    jp["id"] = p.id;
    jp["dims"] = {{"g", p.dim_g}, {"k", p.dim_k}, {"p", p.dim_p}, {"r", p.rank}};
    Json positives = Json::array();
    for (const auto& [coords, mult] : p.positive_mults)
      positives.push_back({{"root", coords}, {"multiplicity", mult}});
    jp["restricted_roots"] = {
        {"count", p.root_count}, {"reduced", p.reduced}, {"positive", positives}};
    jp["chamber"] = {{"coords", p.chamber_coords},
                     {"matrix", p.chamber_matrix},
                     {"identities_hold", p.criteria.chamber_identities}};
    Json reps = Json::array();
    for (const RepCriteria& r : p.criteria.reps) {
      Json jr;
      jr["label"] = r.label;
      jr["in_np"] = r.in_np;
      jr["orbit_dim"] = r.orbit_dim;
      jr["principal"] = r.principal;
      jr["even"] = r.even;
      jr["minus1_centralizer"] = r.minus1_centralizer;
      jr["minus1_grading"] = r.minus1_grading;
      jr["minus1_even"] = r.minus1_even ? Json(*r.minus1_even) : Json();
      jr["noticed"] = r.noticed;
      jr["perp_identity"] = r.perp_identity;
      jr["levi_instance"] = r.levi_instance;
      jr["a_cap_gs_zero"] = r.a_cap_gs_zero;
      jr["self_dual_dims"] = r.self_dual_dims;
      jr["px_nilpotent_sampling"] = r.px_nilpotent_sampling;
      jr["ps_witness"] = r.ps_witness ? Json(*r.ps_witness) : Json();
      jr["witness_consistent"] = r.witness_consistent;
      jr["criteria_agree"] = r.criteria_agree();
      jr["matches_expected"] = r.matches_expected;
      reps.push_back(std::move(jr));
    }
    jp["representatives"] = std::move(reps);
    jp["theorem_checks"] = {{"chamber_identities", p.criteria.chamber_identities},
                            {"theorem_null_p", p.criteria.theorem_null_p},
                            {"theorem_equality", p.criteria.theorem_equality},
                            {"theorem_derived", p.criteria.theorem_derived},
                            {"perp_random", p.criteria.perp_random}};
    Json jks;
    if (!p.ks.available) {
      jks = {{"available", false}, {"reason", p.ks.reason}};
    } else {
      jks["available"] = true;
      jks["convention"] = convention_name(p.ks.convention);
      Json kreps = Json::array();
      for (const KsRepOutcome& o : p.ks.reps) {
        Json jo;
        jo["label"] = o.label;
        jo["cayley_found"] = o.cayley_found;
        if (o.cayley_found) {
          jo["scaling"] = format_scalar(o.scaling);
          jo["compact"] = o.compact;
          jo["minus1"] = o.minus1;
          jo["matches"] = o.matches;
          jo["z_dim"] = o.z_dim;
          jo["z_gram"] = o.z_gram;
          const LieAlgebra& L = catalog_entry(p.id).alg();
          jo["real_triple"] = {
              {"e", detail::element_matrix_json(L, o.real_triple->e)},
              {"h", detail::element_matrix_json(L, o.real_triple->h)},
              {"f", detail::element_matrix_json(L, o.real_triple->f)}};
        } else {
          jo["note"] = o.note;
        }
        kreps.push_back(std::move(jo));
      }
      jks["representatives"] = std::move(kreps);
      jks["ok"] = p.ks.ok;
    }
    jp["cayley"] = std::move(jks);
    jp["pass"] = p.pass;
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  j["pass"] = report.pass;
  return j;
}

namespace detail {
inline std::string yn(bool b) { return b ? "yes" : "no"; }
inline std::string pf(bool b) { return b ? "pass" : "FAIL"; }
}  // namespace detail

inline std::string report_markdown(const Report& report) {
  std::ostringstream os;
  os << "# symcheck verification report\n\n";
  os << "tool version " << report.version << "; seed " << report.config.seed
     << "; samples " << report.config.samples << "; convention "
     << convention_name(report.config.convention) << "\n";
  for (const PairReport& p : report.pairs) {
    os << "\n## " << p.id << " — " << detail::pf(p.pass) << "\n\n";
    os << "dims: g=" << p.dim_g << " k=" << p.dim_k << " p=" << p.dim_p
       << " r=" << p.rank << "\n\n";
    os << "restricted roots: " << p.root_count
       << " total, reduced: " << detail::yn(p.reduced) << ", positive:";
    for (const auto& [coords, mult] : p.positive_mults) {
      os << " [";
      for (std::size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << coords[i];
      os << "]x" << mult;
    }
    os << "\n\n";
    os << "chamber element coords: (";
    for (std::size_t i = 0; i < p.chamber_coords.size(); ++i)
      os << (i ? ", " : "") << p.chamber_coords[i];
    os << "); identities k^c = k^a, p^c = a: "
       << detail::pf(p.criteria.chamber_identities) << "\n\n";
    os << "| representative | in N(p) | orbit dim | principal | even | minus1 "
          "(cent/grad/even) | noticed | perp | levi | agree |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const RepCriteria& r : p.criteria.reps) {
      os << "| " << r.label << " | " << detail::yn(r.in_np) << " | " << r.orbit_dim
         << " | " << detail::yn(r.principal) << " | " << detail::yn(r.even) << " | "
         << detail::yn(r.minus1_centralizer) << "/" << detail::yn(r.minus1_grading)
         << "/" << (r.minus1_even ? detail::yn(*r.minus1_even) : std::string("n/a"))
         << " | " << detail::yn(r.noticed) << " | " << detail::yn(r.perp_identity)
         << " | " << detail::yn(r.levi_instance) << " | "
         << detail::yn(r.criteria_agree()) << " |\n";
    }
    for (const RepCriteria& r : p.criteria.reps)
      if (r.ps_witness)
        os << "\nsemisimple witness in p^s (" << r.label << "): " << *r.ps_witness
           << "\n";
    os << "\ntheorem checks: null_p " << detail::pf(p.criteria.theorem_null_p)
       << ", equality " << detail::pf(p.criteria.theorem_equality) << ", derived "
       << detail::pf(p.criteria.theorem_derived) << ", perp(random) "
       << detail::pf(p.criteria.perp_random) << "\n";
    if (!p.ks.available) {
      os << "\ncayley/compactness: " << p.ks.reason << "\n";
    } else {
      os << "\ncayley/compactness (" << convention_name(p.ks.convention) << "):\n\n";
      os << "| representative | cayley | scaling | compact | minus1 | matches | dim z "
            "|\n";
      os << "|---|---|---|---|---|---|---|\n";
      for (const KsRepOutcome& o : p.ks.reps) {
        if (!o.cayley_found) {
          os << "| " << o.label << " | not found | - | - | "
             << detail::yn(o.minus1) << " | FAIL | - |\n";
        } else {
          os << "| " << o.label << " | found | " << format_scalar(o.scaling) << " | "
             << detail::yn(o.compact) << " | " << detail::yn(o.minus1) << " | "
             << detail::pf(o.matches) << " | " << o.z_dim << " |\n";
        }
      }
      for (const KsRepOutcome& o : p.ks.reps)
        if (!o.cayley_found) os << "\n" << o.label << ": " << o.note << "\n";
    }
  }
  os << "\noverall: " << detail::pf(report.pass) << "\n";
  return os.str();
}

inline std::string render_report(const Report& report) {
  if (report.config.format == RunConfig::Format::json)
    return report_json(report).dump(2) + "\n";
  return report_markdown(report);
}

inline int report_exit_code(const Report& report) { return report.pass ? 0 : 1; }

// ---------------------------------------------------------------------------
// Catalog listing and single-element checks (the remaining CLI surfaces).
// ---------------------------------------------------------------------------

inline std::string list_catalog_text() {
  std::ostringstream os;
  os << "id             g   k   p   r   real form\n";
  for (const std::string& id : catalog_ids()) {
    const CatalogEntry& entry = catalog_entry(id);
    PairContext ctx = analyze_structure(entry);
    os << id;
    for (std::size_t i = id.size(); i < 15; ++i) os << ' ';
    auto pad = [&](std::size_t v) {
      std::string s = std::to_string(v);
      os << s;
      for (std::size_t i = s.size(); i < 4; ++i) os << ' ';
    };
    pad(ctx.alg().dim());
    pad(ctx.pair.k.dim());
    pad(ctx.pair.p.dim());
    pad(ctx.cartan.r);
    os << (entry.real_form ? "yes" : "none") << "\n";
  }
  return os.str();
}

/// Parses the element-file format: a JSON object with exactly one of
/// "matrix" (realization coordinates) or "coords" (basis coordinates);
/// entries are scalar strings or plain integers.
inline Element parse_element_json(const LieAlgebra& L, const Json& j) {
  if (!j.is_object() || j.size() != 1 ||
      (!j.contains("matrix") && !j.contains("coords")))
    throw ParseError("element file must hold exactly one of \"matrix\" or \"coords\"");
  auto to_scalar = [](const Json& v) -> Scalar {
    if (v.is_number_integer()) return Scalar{Rational(v.get<std::int64_t>())};
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    throw ParseError("element entries must be scalar strings or integers");
  };
  if (j.contains("coords")) {
    const Json& arr = j["coords"];
    if (!arr.is_array() || arr.size() != L.dim())
      throw ParseError("coords must have length " + std::to_string(L.dim()));
    std::vector<Scalar> coords;
    for (const Json& v : arr) coords.push_back(to_scalar(v));
    return Element(L, std::move(coords));
  }
  const Json& rows = j["matrix"];
  if (!L.has_realization()) throw ParseError("pair has no matrix realization");
  std::size_t n = L.realization().size;
  if (!rows.is_array() || rows.size() != n)
    throw ParseError("matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw ParseError("matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t jx = 0; jx < n; ++jx) m.at(i, jx) = to_scalar(rows[i][jx]);
  }
  auto coords = L.coords_of_matrix(m);
  if (!coords) throw ParseError("matrix does not lie in the algebra");
  return Element(L, std::move(*coords));
}

struct ElementCheck {
  std::string pair_id;
  bool in_np = false;
  std::string note;
  std::optional<RepCriteria> battery;
};

inline ElementCheck check_element(const PairContext& ctx, const Element& x,
                                  const CheckConfig& cfg) {
  ElementCheck out;
  out.pair_id = ctx.entry().id;
  if (!ctx.pair.p.contains(x.coords)) {
    out.in_np = false;
    out.note = "element does not lie in p";
    return out;
  }
  if (!is_nilpotent_element(x)) {
    out.in_np = false;
    out.note = is_semisimple_element(x) ? "element is semisimple, not nilpotent"
                                        : "element is not nilpotent";
    return out;
  }
  out.in_np = true;
  if (x.is_zero()) {
    out.note = "zero element: triple completion refused; criteria skipped";
    return out;
  }
  out.battery = run_battery(ctx, "user", x, nullptr, cfg);
  return out;
}

inline Json element_check_json(const ElementCheck& check) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["pair"] = check.pair_id;
  j["in_np"] = check.in_np;
  j["note"] = check.note;
  if (check.battery) {
    const RepCriteria& r = *check.battery;
    j["criteria"] = {{"orbit_dim", r.orbit_dim},
                     {"principal", r.principal},
                     {"even", r.even},
                     {"minus1_centralizer", r.minus1_centralizer},
                     {"minus1_grading", r.minus1_grading},
                     {"minus1_even", r.minus1_even ? Json(*r.minus1_even) : Json()},
                     {"noticed", r.noticed},
                     {"perp_identity", r.perp_identity},
                     {"levi_instance", r.levi_instance},
                     {"criteria_agree", r.criteria_agree()}};
  } else {
    j["criteria"] = Json();
  }
  return j;
}

inline std::string element_check_markdown(const ElementCheck& check) {
  std::ostringstream os;
  os << "# element check against " << check.pair_id << "\n\n";
  os << "in N(p): " << detail::yn(check.in_np) << "\n";
  if (!check.note.empty()) os << "note: " << check.note << "\n";
  if (check.battery) {
    const RepCriteria& r = *check.battery;
    os << "orbit dim: " << r.orbit_dim << "\n"
       << "principal: " << detail::yn(r.principal) << "\n"
       << "even: " << detail::yn(r.even) << "\n"
       << "minus1 (cent/grad/even): " << detail::yn(r.minus1_centralizer) << "/"
       << detail::yn(r.minus1_grading) << "/"
       << (r.minus1_even ? detail::yn(*r.minus1_even) : std::string("n/a")) << "\n"
       << "noticed: " << detail::yn(r.noticed) << "\n"
       << "perp identity: " << detail::yn(r.perp_identity) << "\n"
       << "levi instance: " << detail::yn(r.levi_instance) << "\n"
       << "criteria agree: " << detail::yn(r.criteria_agree()) << "\n";
  }
  return os.str();
}

}  // namespace symcheck
