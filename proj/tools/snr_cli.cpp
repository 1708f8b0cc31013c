// Batch front-end. Exit codes: 0 ok, 2 usage, 3 domain, 4 resource, 5 internal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "snr/boolmaps.hpp"
#include "snr/counting.hpp"
#include "snr/errors.hpp"
#include "snr/hasse.hpp"
#include "snr/json_io.hpp"
#include "snr/weights.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;
constexpr int kExitInternal = 5;

constexpr std::uint64_t kDefaultSeed = 20240229;

void print_json(const snr::Json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw snr::DomainError("cannot write " + path);
  out << text;
}

std::optional<int> opt(const CLI::Option* flag, int value) {
  return flag->count() ? std::optional<int>(value) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice S(n,r) toolkit: enumeration, Hasse diagrams, rank counts, weight functions, boolean maps"};
  app.require_subcommand(1, 1);

  int n = 0;
  int r = 0;
  int d = 0;

  auto* cmd_enum = app.add_subcommand("enumerate", "list the words of S(n,r) in canonical order");
  bool enum_json = false;
  cmd_enum->add_option("--n", n, "number of nonzero symbols")->required();
  cmd_enum->add_option("--r", r, "number of positive symbols")->required();
  auto* enum_d = cmd_enum->add_option("--d", d, "keep only words with d nonzero symbols");
  cmd_enum->add_flag("--json", enum_json, "emit JSON instead of one word per line");

  auto* cmd_hasse = app.add_subcommand("hasse", "build the Hasse diagram of S(n,r)");
  std::string order_text = "outin";
  std::string dot_path;
  std::string hasse_json_path;
  cmd_hasse->add_option("--n", n)->required();
  cmd_hasse->add_option("--r", r)->required();
  cmd_hasse->add_option("--order", order_text, "generation order")->check(CLI::IsMember({"outin", "leftright"}));
  cmd_hasse->add_option("--dot", dot_path, "write Graphviz DOT here ('-' for stdout)");
  cmd_hasse->add_option("--json", hasse_json_path, "write levels and edges as JSON here ('-' for stdout)");

  auto* cmd_count = app.add_subcommand("count", "CSV of rank counts s(n,r,k), computed three ways");
  int n_max = 0;
  cmd_count->add_option("--n-max", n_max)->required();

  auto* cmd_weights = app.add_subcommand("weights-eval", "evaluate an (n,r)-function over the lattice");
  std::string fn_path;
  bool random = false;
  std::uint64_t seed = kDefaultSeed;
  auto* fn_opt = cmd_weights->add_option("--fn", fn_path, "JSON function description");
  auto* random_opt = cmd_weights->add_flag("--random", random, "draw a random weight function for --n/--r");
  cmd_weights->add_option("--seed", seed, "seed for --random")->needs(random_opt);
  auto* weights_n = cmd_weights->add_option("--n", n)->needs(random_opt);
  auto* weights_r = cmd_weights->add_option("--r", r)->needs(random_opt);
  auto* weights_d = cmd_weights->add_option("--d", d, "also count nonnegative d-words");
  fn_opt->excludes(random_opt);
  random_opt->needs(weights_n, weights_r);

  snr::EnumerationLimits limits;
  unsigned threads = 1;
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--n", n)->required();
    cmd->add_option("--r", r)->required();
    cmd->add_option("--cap", limits.cap, "maximum number of boolean maps to enumerate");
    cmd->add_option("--max-n", limits.max_n, "largest n accepted for exhaustive enumeration");
    cmd->add_option("--threads", threads, "worker threads for representability checks")->check(CLI::Range(1U, 256U));
  };

  auto* cmd_gamma = app.add_subcommand("gamma", "extremal numbers by exhaustive boolean-map enumeration");
  add_limits(cmd_gamma);
  auto* gamma_d = cmd_gamma->add_option("--d", d, "restrict to words with d nonzero symbols");

  auto* cmd_report = app.add_subcommand("report", "weighted boolean maps versus representable ones");
  bool include_bm = false;
  add_limits(cmd_report);
  cmd_report->add_flag("--include-bm", include_bm, "also check every boolean map (no weight axioms)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_enum) {
      const snr::LatticeParams params(n, r);
      const auto words = enum_d->count() ? snr::enumerate_d_slice(params, d) : snr::enumerate(params);
      if (enum_json) {
        print_json(snr::words_to_json(params, words));
      } else {
        for (const auto& w : words) std::cout << w.to_string() << '\n';
      }
    } else if (*cmd_hasse) {
      const snr::HasseDiagram diagram = snr::build(snr::LatticeParams(n, r), snr::parse_gen_order(order_text));
      if (dot_path.empty() && hasse_json_path.empty()) dot_path = "-";
      if (!dot_path.empty()) {
        const std::string dot = snr::to_dot(diagram);
        dot_path == "-" ? void(std::cout << dot) : write_file(dot_path, dot);
      }
      if (!hasse_json_path.empty()) {
        const std::string text = snr::diagram_to_json(diagram).dump(2) + "\n";
        hasse_json_path == "-" ? void(std::cout << text) : write_file(hasse_json_path, text);
      }
    } else if (*cmd_count) {
      std::cout << snr::count_table_csv(snr::count_table(n_max));
    } else if (*cmd_weights) {
      if (!fn_opt->count() && !random) throw CLI::RequiredError("--fn or --random");
      std::optional<snr::NrFunction> f;
      if (random) {
        std::mt19937_64 rng(seed);
        f = snr::random_function(snr::LatticeParams(n, r), rng, true);
      } else {
        f = snr::load_function(fn_path);
      }
      print_json(snr::weights_eval_to_json(*f, opt(weights_d, d)));
    } else if (*cmd_gamma || *cmd_report) {
      const snr::LatticeParams params(n, r);
      snr::AnalysisOptions options{limits, std::nullopt, include_bm, threads};
      if (*cmd_gamma) options.d = opt(gamma_d, d);
      try {
        print_json(snr::report_to_json(snr::analyze(params, options)));
      } catch (const snr::IncompleteReport& e) {
        print_json(snr::report_to_json(e.report(), false));
        throw;
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const snr::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const snr::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << " (after " << e.partial_count() << " items)\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
