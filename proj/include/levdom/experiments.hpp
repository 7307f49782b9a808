#pragma once

#include "levdom/solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace levdom {

/// Leading term (k+3) n^2 / (2 (k-1)(k+1)) of the conjectured value of
/// gamma(G_{k,2}). Throws InvalidParameters for k < 3.
double conjecture_main_term(int n, int k);

struct ExperimentRow {
  int n = 0;
  int k = 0;
  /// Present only when the exact solver proved optimality.
  std::optional<std::uint64_t> gamma_exact;
  bool proven = false;
  /// Absent when the graph is too large to materialize.
  std::optional<std::uint64_t> greedy_value;
  std::optional<std::uint64_t> construction_size;
  std::uint64_t lower_bound = 0;
  std::optional<double> conjecture_main_term;

  /// Smallest dominating set found by any solver (conjecture table only).
  std::optional<std::uint64_t> best_upper;
  /// "enumerative", "structural", "enumerative+structural" or "none".
  std::string verification = "none";
  /// "ok", "budget-exceeded", or "failed: <reason>".
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
  /// best_upper / conjecture_main_term when both exist.
  std::optional<double> ratio() const;
};

struct SweepOptions {
  std::uint64_t verify_cap = kDefaultVerifyCap;
  std::uint64_t node_budget = 10'000'000;
  unsigned workers = 1;
  std::uint64_t materialize_cap = kDefaultMaterializeCap;
  /// The exact solver only runs on graphs with at most this many vertices.
  std::uint64_t exact_max_vertices = 200;
  /// Skip enumeration, greedy and exact solving entirely.
  bool structural_only = false;
  /// When set, every construction certificate is written here, read back and
  /// re-verified.
  std::optional<std::string> certificate_dir;
};

/// Rows for n_min..n_max of the k = n-1 construction. Throws
/// InvalidParameters unless 4 <= n_min <= n_max <= 64.
std::vector<ExperimentRow> run_theorem2_sweep(int n_min, int n_max, const SweepOptions& options = {});

/// Rows for every ceil(n/2) < k < n, n in n_min..n_max (l = 2).
std::vector<ExperimentRow> run_theorem1_sweep(int n_min, int n_max, const SweepOptions& options = {});

/// Rows for every 2 <= k < n <= n_max with l = 1, checking gamma = n-k+1.
std::vector<ExperimentRow> run_gk1_check(int n_max, const SweepOptions& options = {});

/// Report-only rows for G_{k,2}, k in k_min..k_max (k >= 3, k < n).
std::vector<ExperimentRow> run_conjecture_table(int n_min, int n_max, int k_min, int k_max,
                                                const SweepOptions& options = {});

/// Column order: n,k,gamma_exact,proven,greedy_value,construction_size,
/// lower_bound,conjecture_main_term (plus ratio when with_ratio is set).
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool with_ratio = false);
nlohmann::json rows_to_json(const std::vector<ExperimentRow>& rows, bool with_ratio = false);

/// Same text the CSV and JSON writers use for a real value.
std::string format_real(double value);

}  // namespace levdom
