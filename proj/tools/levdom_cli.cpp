// levdom: domination experiments on two-level graphs of the n-cube.
//
// Exit codes: 0 success/verified, 1 verification failed or a theorem check was
// violated, 2 invalid input, 3 budget exceeded.

#include "levdom/constructions.hpp"
#include "levdom/error.hpp"
#include "levdom/experiments.hpp"
#include "levdom/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace levdom;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
    case ErrorKind::BudgetExceeded:
      return kExitBudget;
    default:
      return kExitInvalid;
  }
}

/// Writes text to `path`, or to stdout when path is empty.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

int rows_exit_code(const std::vector<ExperimentRow>& rows) {
  int code = kExitOk;
  for (const auto& row : rows) {
    if (row.status == "budget-exceeded") {
      if (code == kExitOk) code = kExitBudget;
    } else if (!row.ok()) {
      code = kExitFailed;
    }
  }
  return code;
}

std::string render_rows(const std::vector<ExperimentRow>& rows, const std::string& format,
                        bool with_ratio) {
  if (format == "json") return rows_to_json(rows, with_ratio).dump(2) + "\n";
  std::ostringstream os;
  write_csv(os, rows, with_ratio);
  return os.str();
}

struct SweepFlags {
  std::uint64_t node_budget = 10'000'000;
  std::uint64_t verify_cap = kDefaultVerifyCap;
  std::uint64_t exact_max_vertices = 200;
  unsigned workers = 1;
  std::string cert_dir;
  bool structural_only = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--node-budget", node_budget, "Branch-and-bound node budget per row");
    cmd->add_option("--verify-cap", verify_cap, "Vertex cap for enumerative verification");
    cmd->add_option("--exact-max-vertices", exact_max_vertices,
                    "Run the exact solver only on graphs up to this many vertices");
    cmd->add_option("--workers", workers, "Branch-and-bound worker threads");
    cmd->add_option("--cert-dir", cert_dir, "Write, reload and re-verify row certificates here");
    cmd->add_flag("--structural", structural_only, "Structural checks only, no enumeration");
  }

  SweepOptions options() const {
    SweepOptions o;
    o.node_budget = node_budget;
    o.verify_cap = verify_cap;
    o.exact_max_vertices = exact_max_vertices;
    o.workers = workers;
    o.structural_only = structural_only;
    if (!cert_dir.empty()) o.certificate_dir = cert_dir;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination numbers of graphs defined by two levels of the n-cube"};
  app.require_subcommand(1);

  int n = 0, k = 0, l = 0;
  std::string output;
  int theorem = 0;
  std::string cert_path;
  bool structural = false;
  std::uint64_t node_budget = 10'000'000;
  unsigned workers = 1;
  bool no_timing = false;
  int n_min = 0, n_max = 0, k_min = 0, k_max = 0;
  std::string format = "csv";
  SweepFlags sweep_flags;

  auto* stats = app.add_subcommand("stats", "Vertex, edge and degree counts of G_{k,l}");
  stats->add_option("--n", n)->required();
  stats->add_option("--k", k)->required();
  stats->add_option("--l", l)->required();

  auto* construct = app.add_subcommand("construct", "Emit a construction certificate");
  construct->add_option("--theorem", theorem, "1: k > ceil(n/2), l = 2; 2: k = n-1, l = 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  construct->add_option("--n", n)->required();
  construct->add_option("--k", k, "Upper level (theorem 1 only)");
  construct->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("--cert", cert_path)->required();
  verify->add_flag("--structural", structural, "Polynomial-time check for l = 2 certificates");

  auto* exact = app.add_subcommand("exact", "Exact domination number by branch and bound");
  exact->add_option("--n", n)->required();
  exact->add_option("--k", k)->required();
  exact->add_option("--l", l)->required();
  exact->add_option("--node-budget", node_budget);
  exact->add_option("--workers", workers);
  exact->add_option("-o,--output", output);
  exact->add_flag("--no-timing", no_timing, "Omit elapsed_ms for reproducible output");

  auto* greedy = app.add_subcommand("greedy", "Greedy dominating set");
  greedy->add_option("--n", n)->required();
  greedy->add_option("--k", k)->required();
  greedy->add_option("--l", l)->required();
  greedy->add_option("-o,--output", output);
  greedy->add_flag("--no-timing", no_timing, "Omit elapsed_ms for reproducible output");

  auto* sweep = app.add_subcommand("sweep", "Reproduce a construction over a range of n");
  sweep->add_option("--theorem", theorem)->required()->check(CLI::IsMember({1, 2}));
  sweep->add_option("--n-min", n_min)->required();
  sweep->add_option("--n-max", n_max)->required();
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("-o,--output", output);
  sweep_flags.attach(sweep);

  auto* gk1 = app.add_subcommand("gk1-check", "Check gamma(G_{k,1}) = n-k+1 for all k < n <= n_max");
  gk1->add_option("--n-max", n_max)->required();
  gk1->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  gk1->add_option("-o,--output", output);
  sweep_flags.attach(gk1);

  auto* conjecture = app.add_subcommand("conjecture", "Tabulate bounds against the conjectured main term");
  conjecture->add_option("--n-min", n_min)->required();
  conjecture->add_option("--n-max", n_max)->required();
  conjecture->add_option("--k-min", k_min)->required();
  conjecture->add_option("--k-max", k_max)->required();
  conjecture->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  conjecture->add_option("-o,--output", output);
  sweep_flags.attach(conjecture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*stats) {
      const auto s = graph_stats(LevelGraphSpec(n, k, l));
      const nlohmann::json doc = {{"vertex_count", s.vertex_count},
                                  {"edge_count", s.edge_count},
                                  {"upper_degree", s.upper_degree},
                                  {"lower_degree", s.lower_degree}};
      std::cout << doc.dump() << '\n';
      return kExitOk;
    }

    if (*construct) {
      std::optional<DominationCertificate> cert;
      if (theorem == 1) {
        if (construct->count("--k") == 0) {
          throw Error(ErrorKind::InvalidInput, "--k is required for theorem 1");
        }
        cert = theorem1_construct(n, k).second;
      } else {
        cert = theorem2_construct(n);
      }
      emit(to_json(*cert).dump() + "\n", output);
      return kExitOk;
    }

    if (*verify) {
      const auto cert = read_certificate(cert_path);
      nlohmann::json doc = {{"n", cert.spec().n()},
                            {"k", cert.spec().k()},
                            {"l", cert.spec().l()},
                            {"size", cert.size()}};
      bool ok = false;
      if (structural) {
        ok = verify_structural(cert);
        doc["mode"] = "structural";
      } else {
        const auto result = verify_certificate(cert);
        ok = result.verified;
        doc["mode"] = "enumerative";
        if (result.witness) {
          doc["witness"] = {{"level", to_string(result.witness->level)},
                            {"elements", result.witness->set.elements()}};
        }
      }
      doc["verified"] = ok;
      std::cout << doc.dump() << '\n';
      return ok ? kExitOk : kExitFailed;
    }

    if (*exact) {
      BranchAndBoundOptions options;
      options.node_budget = node_budget;
      options.workers = workers;
      const auto report = branch_and_bound_gamma(LevelGraphSpec(n, k, l), options);
      emit(to_json(report, !no_timing).dump(2) + "\n", output);
      return report.proven_optimal ? kExitOk : kExitBudget;
    }

    if (*greedy) {
      const auto report = greedy_dominate(LevelGraphSpec(n, k, l));
      emit(to_json(report, !no_timing).dump(2) + "\n", output);
      return kExitOk;
    }

    if (*sweep) {
      const auto options = sweep_flags.options();
      const auto rows = theorem == 1 ? run_theorem1_sweep(n_min, n_max, options)
                                     : run_theorem2_sweep(n_min, n_max, options);
      emit(render_rows(rows, format, false), output);
      return rows_exit_code(rows);
    }

    if (*gk1) {
      const auto rows = run_gk1_check(n_max, sweep_flags.options());
      emit(render_rows(rows, format, false), output);
      return rows_exit_code(rows);
    }

    if (*conjecture) {
      const auto rows = run_conjecture_table(n_min, n_max, k_min, k_max, sweep_flags.options());
      emit(render_rows(rows, format, true), output);
      // Report only: rows never fail on the conjectured value itself.
      return rows_exit_code(rows);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitOk;
}
