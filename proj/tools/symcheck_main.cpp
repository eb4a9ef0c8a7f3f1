// symcheck: exact-arithmetic verification of nilpotent-orbit criteria for
// symmetric pairs of classical Lie algebras.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or input
// error, 3 internal invariant violation.

#include "symcheck/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

symcheck::RunConfig make_config(const std::string& pairs_arg, std::uint64_t seed,
                                std::size_t samples, const std::string& convention,
                                const std::string& format, bool parallel) {
  symcheck::RunConfig cfg;
  cfg.pairs = symcheck::resolve_pair_ids(pairs_arg);
  cfg.seed = seed;
  cfg.samples = samples;
  if (samples < 1) throw symcheck::ParseError("--samples must be at least 1");
  if (convention == "paper")
    cfg.convention = symcheck::Convention::paper;
  else if (convention == "adjusted")
    cfg.convention = symcheck::Convention::adjusted;
  else
    throw symcheck::ParseError("--convention must be paper or adjusted");
  if (format == "json")
    cfg.format = symcheck::RunConfig::Format::json;
  else if (format == "md")
    cfg.format = symcheck::RunConfig::Format::markdown;
  else
    throw symcheck::ParseError("--format must be json or md");
  cfg.parallel = parallel;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of symmetric-pair nilpotent-orbit criteria"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string convention = "adjusted";
  std::string format = "md";
  bool parallel = false;
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--samples", samples, "samples per randomized check");
  app.add_option("--convention", convention, "Cayley sign convention: paper|adjusted");
  app.add_option("--format", format, "report format: json|md");
  app.add_flag("--parallel", parallel, "verify pairs concurrently");

  CLI::App* cmd_list = app.add_subcommand("list", "list catalog pairs");
  CLI::App* cmd_analyze = app.add_subcommand("analyze", "full report for one pair");
  std::string analyze_id;
  cmd_analyze->add_option("id", analyze_id, "pair id")->required();
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the verification suite");
  std::string pairs_arg = "all";
  cmd_verify->add_option("--pairs", pairs_arg, "comma-separated ids or 'all'");
  CLI::App* cmd_element = app.add_subcommand("element", "classify an element file");
  std::string element_id;
  std::string element_file;
  cmd_element->add_option("id", element_id, "pair id")->required();
  cmd_element->add_option("--file", element_file, "element JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_list)) {
      std::cout << symcheck::list_catalog_text();
      return 0;
    }
    if (app.got_subcommand(cmd_analyze) || app.got_subcommand(cmd_verify)) {
      std::string selector = app.got_subcommand(cmd_analyze) ? analyze_id : pairs_arg;
      symcheck::RunConfig cfg =
          make_config(selector, seed, samples, convention, format, parallel);
      symcheck::Report report = symcheck::run_verification(cfg);
      std::cout << symcheck::render_report(report);
      return symcheck::report_exit_code(report);
    }
    // element
    const symcheck::CatalogEntry& entry = symcheck::catalog_entry(element_id);
    std::ifstream in(element_file);
    if (!in) throw symcheck::ParseError("cannot open file " + element_file);
    symcheck::Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw symcheck::ParseError(std::string("invalid JSON: ") + e.what());
    }
    symcheck::Element x = symcheck::parse_element_json(entry.alg(), j);
    symcheck::PairContext ctx = symcheck::analyze_structure(entry);
    symcheck::ElementCheck check =
        symcheck::check_element(ctx, x, symcheck::CheckConfig{seed, samples});
    if (format == "json")
      std::cout << symcheck::element_check_json(check).dump(2) << "\n";
    else
      std::cout << symcheck::element_check_markdown(check);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
