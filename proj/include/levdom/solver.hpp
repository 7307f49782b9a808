#pragma once

#include "levdom/certificate.hpp"
#include "levdom/level_graph.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>

namespace levdom {

enum class SolveMethod { BruteForce, Greedy, BranchAndBound };

const char* to_string(SolveMethod method);

struct SolveReport {
  LevelGraphSpec spec;
  SolveMethod method;
  /// Size of the best dominating set found; equals gamma when proven_optimal.
  std::uint64_t value;
  DominationCertificate witness;
  bool proven_optimal;
  std::uint64_t lower_bound;
  std::uint64_t nodes_explored;
  std::chrono::nanoseconds elapsed;
};

/// elapsed is the only field that varies between identical runs; leave it
/// out to get reproducible bytes.
nlohmann::json to_json(const SolveReport& report, bool include_timing = true);

/// min a + b subject to a*C(k,l) + b >= C(n,l) and b*C(n-l,k-l) + a >= C(n,k):
/// a upper members and b lower members must between them dominate both levels.
std::uint64_t counting_lower_bound(const LevelGraphSpec& spec);

/// Greedy set cover over closed neighbourhoods. Ties go to the lowest vertex
/// index (Upper first, then colex rank).
SolveReport greedy_dominate(const LevelGraphSpec& spec,
                            std::uint64_t max_vertices = kDefaultMaterializeCap);

inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

/// Tests every vertex subset of size 1, 2, ..., max_size. The witness is the
/// lexicographically least dominating set of optimal size. Throws
/// BudgetExceeded once more than `budget` subsets have been tested, or if
/// nothing of size <= max_size dominates.
SolveReport brute_force_gamma(const LevelGraphSpec& spec, int max_size,
                              std::uint64_t budget = kDefaultBruteForceBudget,
                              std::uint64_t max_vertices = kDefaultMaterializeCap);

struct BranchAndBoundOptions {
  std::uint64_t node_budget = 10'000'000;
  unsigned workers = 1;
  std::uint64_t max_vertices = kDefaultMaterializeCap;
};

/// Exact minimum dominating set. Running out of node_budget is not an error:
/// the report then carries the incumbent with proven_optimal = false.
SolveReport branch_and_bound_gamma(const LevelGraphSpec& spec,
                                   const BranchAndBoundOptions& options = {});

}  // namespace levdom
