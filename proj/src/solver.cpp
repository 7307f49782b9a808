#include "levdom/solver.hpp"

#include "levdom/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace levdom {

const char* to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::BruteForce: return "brute_force";
    case SolveMethod::Greedy: return "greedy";
    case SolveMethod::BranchAndBound: return "branch_and_bound";
  }
  return "unknown";
}

nlohmann::json to_json(const SolveReport& report, bool include_timing) {
  nlohmann::json doc = {
      {"spec", {{"n", report.spec.n()}, {"k", report.spec.k()}, {"l", report.spec.l()}}},
      {"method", to_string(report.method)},
      {"value", report.value},
      {"witness", to_json(report.witness)},
      {"proven_optimal", report.proven_optimal},
      {"lower_bound", report.lower_bound},
      {"nodes_explored", report.nodes_explored},
  };
  if (include_timing) {
    doc["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return doc;
}

std::uint64_t counting_lower_bound(const LevelGraphSpec& spec) {
  using u128 = unsigned __int128;
  const u128 lower_total = spec.lower_count();
  const u128 upper_total = spec.upper_count();
  const u128 per_upper = binomial(spec.k(), spec.l());
  const u128 per_lower = binomial(spec.n() - spec.l(), spec.k() - spec.l());
  auto ceil_div = [](u128 num, u128 den) { return (num + den - 1) / den; };

  // Past a = ceil(C(n,l)/C(k,l)) the first constraint is slack and each extra
  // upper member saves at most 1/C(n-l,k-l) <= 1/2 of a lower one.
  const u128 a_max = ceil_div(lower_total, per_upper);
  u128 best = ~u128{0};
  for (u128 a = 0; a <= a_max; ++a) {
    const u128 covered_lower = a * per_upper;
    const u128 b_lower = covered_lower >= lower_total ? 0 : lower_total - covered_lower;
    const u128 b_upper = a >= upper_total ? 0 : ceil_div(upper_total - a, per_lower);
    best = std::min(best, a + std::max(b_lower, b_upper));
  }
  return static_cast<std::uint64_t>(best);
}

namespace {

using Clock = std::chrono::steady_clock;

/// Closed neighbourhoods of a materialized graph as packed bit rows.
class ClosedRows {
public:
  explicit ClosedRows(const MaterializedGraph& graph)
      : vertices_(graph.vertex_count()), words_((vertices_ + 63) / 64),
        rows_(static_cast<std::size_t>(vertices_) * words_, 0) {
    for (std::uint32_t v = 0; v < vertices_; ++v) {
      set(row(v), v);
      for (auto w : graph.neighbors(v)) set(row(v), w);
    }
    tail_ = vertices_ % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (vertices_ % 64)) - 1;
  }

  std::uint32_t vertices() const { return vertices_; }
  std::uint32_t words() const { return words_; }
  /// Valid-bit mask of the last word.
  std::uint64_t tail() const { return tail_; }

  std::uint64_t* row(std::uint32_t v) { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row(std::uint32_t v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  static void set(std::uint64_t* bits, std::uint32_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }
  static bool test(const std::uint64_t* bits, std::uint32_t i) {
    return (bits[i / 64] >> (i % 64)) & 1U;
  }

private:
  std::uint32_t vertices_;
  std::uint32_t words_;
  std::uint64_t tail_ = 0;
  std::vector<std::uint64_t> rows_;
};

std::uint32_t max_closed_degree(const MaterializedGraph& graph) {
  std::size_t best = 0;
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) best = std::max(best, graph.degree(v));
  return static_cast<std::uint32_t>(best + 1);
}

std::uint64_t root_lower_bound(const MaterializedGraph& graph) {
  const std::uint64_t cover = max_closed_degree(graph);
  const std::uint64_t by_degree = (graph.vertex_count() + cover - 1) / cover;
  return std::max(counting_lower_bound(graph.spec()), by_degree);
}

DominationCertificate certificate_of(const MaterializedGraph& graph,
                                     const std::vector<std::uint32_t>& picked,
                                     Provenance provenance) {
  std::vector<VertexRef> members;
  members.reserve(picked.size());
  for (auto v : picked) members.push_back(graph.vertex_at(v));
  return DominationCertificate(graph.spec(), std::move(members), provenance);
}

void check_witness(const DominationCertificate& witness) {
  if (!verify_certificate(witness).verified) {
    throw std::logic_error("solver produced a non-dominating witness");
  }
}

std::vector<std::uint32_t> greedy_cover(const MaterializedGraph& graph) {
  const std::uint32_t count = graph.vertex_count();
  std::vector<std::uint32_t> gain(count);
  for (std::uint32_t v = 0; v < count; ++v) gain[v] = static_cast<std::uint32_t>(graph.degree(v) + 1);
  std::vector<char> covered(count, 0);
  std::uint32_t uncovered = count;
  std::vector<std::uint32_t> picked;

  auto cover = [&](std::uint32_t w) {
    if (covered[w]) return;
    covered[w] = 1;
    --uncovered;
    --gain[w];
    for (auto x : graph.neighbors(w)) --gain[x];
  };

  while (uncovered > 0) {
    std::uint32_t best = 0;
    for (std::uint32_t v = 1; v < count; ++v) {
      if (gain[v] > gain[best]) best = v;
    }
    picked.push_back(best);
    cover(best);
    for (auto w : graph.neighbors(best)) cover(w);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace

SolveReport greedy_dominate(const LevelGraphSpec& spec, std::uint64_t max_vertices) {
  const auto start = Clock::now();
  const auto graph = materialize(spec, max_vertices);
  const auto picked = greedy_cover(graph);
  auto witness = certificate_of(graph, picked, Provenance::Greedy);
  check_witness(witness);
  const std::uint64_t bound = std::min<std::uint64_t>(root_lower_bound(graph), picked.size());
  return SolveReport{spec,
                     SolveMethod::Greedy,
                     picked.size(),
                     std::move(witness),
                     bound == picked.size(),
                     bound,
                     0,
                     Clock::now() - start};
}

SolveReport brute_force_gamma(const LevelGraphSpec& spec, int max_size, std::uint64_t budget,
                              std::uint64_t max_vertices) {
  const auto start = Clock::now();
  const auto graph = materialize(spec, max_vertices);
  const ClosedRows rows(graph);
  const std::uint32_t vertices = rows.vertices();
  const std::uint32_t words = rows.words();

  std::uint64_t tested = 0;
  for (int size = 1; size <= max_size && static_cast<std::uint32_t>(size) <= vertices; ++size) {
    // acc[d] holds the union of the first d+1 chosen closed neighbourhoods.
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(size) * words);
    std::vector<std::uint32_t> pick(size);
    bool found = false;

    auto full = [&](const std::uint64_t* bits) {
      for (std::uint32_t w = 0; w + 1 < words; ++w) {
        if (bits[w] != ~std::uint64_t{0}) return false;
      }
      return bits[words - 1] == rows.tail();
    };

    // Lexicographic enumeration of index tuples pick[0] < ... < pick[size-1].
    auto descend = [&](auto&& self, int depth, std::uint32_t from) -> void {
      std::uint64_t* here = acc.data() + static_cast<std::size_t>(depth) * words;
      const std::uint64_t* prev = depth == 0 ? nullptr : here - words;
      const std::uint32_t last = vertices - static_cast<std::uint32_t>(size - depth);
      for (std::uint32_t v = from; v <= last && !found; ++v) {
        const std::uint64_t* r = rows.row(v);
        for (std::uint32_t w = 0; w < words; ++w) here[w] = prev ? (prev[w] | r[w]) : r[w];
        pick[depth] = v;
        if (depth + 1 == size) {
          if (++tested > budget) {
            throw Error(ErrorKind::BudgetExceeded,
                        "brute force on G" + spec.to_string() + " tested more than " +
                            std::to_string(budget) + " subsets");
          }
          found = full(here);
        } else {
          self(self, depth + 1, v + 1);
        }
      }
    };
    descend(descend, 0, 0);

    if (found) {
      auto witness = certificate_of(graph, pick, Provenance::Exact);
      check_witness(witness);
      return SolveReport{spec,
                         SolveMethod::BruteForce,
                         static_cast<std::uint64_t>(size),
                         std::move(witness),
                         true,
                         static_cast<std::uint64_t>(size),
                         tested,
                         Clock::now() - start};
    }
  }
  throw Error(ErrorKind::BudgetExceeded, "no dominating set of size <= " +
                                             std::to_string(max_size) + " in G" + spec.to_string());
}

namespace {

/// Set-cover style search: pick the uncovered vertex with the fewest usable
/// dominators and branch on which one covers it. Branch i includes candidate
/// c_i and excludes c_1..c_{i-1}.
class BranchAndBound {
public:
  BranchAndBound(const ClosedRows& rows, std::uint64_t node_budget, std::uint64_t target,
                 std::vector<std::uint32_t> incumbent)
      : rows_(rows), budget_(node_budget), target_(target),
        best_size_(incumbent.size()), best_(std::move(incumbent)) {}

  void run(unsigned workers) {
    Workspace root(rows_);
    const std::uint32_t words = rows_.words();
    std::fill(root.covered.begin(), root.covered.begin() + words, 0);
    std::fill(root.excluded.begin(), root.excluded.begin() + words, 0);
    if (best_size_.load() <= target_) return;

    Expansion top;
    if (!expand(root, 0, top)) return;

    std::atomic<std::size_t> next{0};
    auto work = [&] {
      Workspace ws(rows_);
      const std::uint64_t* base_cov = root.covered.data();
      for (std::size_t i; (i = next.fetch_add(1)) < top.candidates.size();) {
        if (stop_.load()) return;
        if (top.bound >= best_size_.load()) return;
        std::uint64_t* cov = ws.covered.data() + words;
        std::uint64_t* exc = ws.excluded.data() + words;
        const std::uint64_t* r = rows_.row(top.candidates[i]);
        for (std::uint32_t w = 0; w < words; ++w) {
          cov[w] = base_cov[w] | r[w];
          exc[w] = 0;
        }
        for (std::size_t j = 0; j < i; ++j) ClosedRows::set(exc, top.candidates[j]);
        ws.chosen.assign(1, top.candidates[i]);
        search(ws, 1);
      }
    };

    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
  }

  bool exhausted() const { return exhausted_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }
  std::vector<std::uint32_t> best() const {
    std::lock_guard lock(mutex_);
    return best_;
  }

private:
  struct Workspace {
    explicit Workspace(const ClosedRows& rows)
        : covered(static_cast<std::size_t>(rows.vertices() + 2) * rows.words()),
          excluded(covered.size()), gain(rows.vertices()) {}
    std::vector<std::uint64_t> covered;   // one row per depth
    std::vector<std::uint64_t> excluded;  // one row per depth
    std::vector<std::uint32_t> gain;
    std::vector<std::uint32_t> chosen;
  };

  struct Expansion {
    /// depth + ceil(uncovered / max gain)
    std::uint64_t bound = 0;
    std::vector<std::uint32_t> candidates;
  };

  /// Returns false if the node is closed (solved, pruned, or out of budget);
  /// otherwise fills the ordered branching candidates.
  bool expand(Workspace& ws, std::uint32_t depth, Expansion& out) {
    if (nodes_.fetch_add(1) >= budget_) {
      exhausted_.store(true);
      stop_.store(true);
      return false;
    }
    const std::uint32_t words = rows_.words();
    const std::uint64_t* cov = ws.covered.data() + static_cast<std::size_t>(depth) * words;
    const std::uint64_t* exc = ws.excluded.data() + static_cast<std::size_t>(depth) * words;

    std::uint32_t covered_count = 0;
    for (std::uint32_t w = 0; w < words; ++w) covered_count += std::popcount(cov[w]);
    const std::uint32_t uncovered = rows_.vertices() - covered_count;
    if (uncovered == 0) {
      offer(ws.chosen);
      return false;
    }
    if (depth + 1 >= best_size_.load()) return false;

    std::uint32_t max_gain = 0;
    for (std::uint32_t v = 0; v < rows_.vertices(); ++v) {
      std::uint32_t g = 0;
      if (!ClosedRows::test(exc, v)) {
        const std::uint64_t* r = rows_.row(v);
        for (std::uint32_t w = 0; w < words; ++w) g += std::popcount(r[w] & ~cov[w]);
      }
      ws.gain[v] = g;
      max_gain = std::max(max_gain, g);
    }
    if (max_gain == 0) return false;
    out.bound = depth + (uncovered + max_gain - 1) / max_gain;
    if (out.bound >= best_size_.load()) return false;

    // Closed neighbourhoods are symmetric: the dominators of u are N[u].
    std::uint32_t pivot = 0;
    std::uint32_t fewest = ~std::uint32_t{0};
    for (std::uint32_t u = 0; u < rows_.vertices(); ++u) {
      if (ClosedRows::test(cov, u)) continue;
      const std::uint64_t* r = rows_.row(u);
      std::uint32_t options = 0;
      for (std::uint32_t w = 0; w < words; ++w) options += std::popcount(r[w] & ~exc[w]);
      if (options < fewest) {
        fewest = options;
        pivot = u;
        if (options <= 1) break;
      }
    }
    if (fewest == 0) return false;

    out.candidates.clear();
    const std::uint64_t* r = rows_.row(pivot);
    for (std::uint32_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = r[w] & ~exc[w]; bits != 0; bits &= bits - 1) {
        out.candidates.push_back(w * 64 + std::countr_zero(bits));
      }
    }
    std::stable_sort(out.candidates.begin(), out.candidates.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return ws.gain[a] > ws.gain[b]; });
    return true;
  }

  void search(Workspace& ws, std::uint32_t depth) {
    Expansion node;
    if (stop_.load() || !expand(ws, depth, node)) return;
    const std::uint32_t words = rows_.words();
    const std::uint64_t* cov = ws.covered.data() + static_cast<std::size_t>(depth) * words;
    const std::uint64_t* exc = ws.excluded.data() + static_cast<std::size_t>(depth) * words;
    std::uint64_t* child_cov = ws.covered.data() + static_cast<std::size_t>(depth + 1) * words;
    std::uint64_t* child_exc = ws.excluded.data() + static_cast<std::size_t>(depth + 1) * words;

    std::copy(exc, exc + words, child_exc);
    for (auto c : node.candidates) {
      if (stop_.load() || node.bound >= best_size_.load()) return;
      const std::uint64_t* r = rows_.row(c);
      for (std::uint32_t w = 0; w < words; ++w) child_cov[w] = cov[w] | r[w];
      ws.chosen.push_back(c);
      search(ws, depth + 1);
      ws.chosen.pop_back();
      // Later siblings must not reuse c; the child rows are rewritten on the
      // next iteration, so re-derive the exclusions from this level.
      std::copy(exc, exc + words, child_exc);
      for (auto prior : node.candidates) {
        ClosedRows::set(child_exc, prior);
        if (prior == c) break;
      }
    }
  }

  void offer(const std::vector<std::uint32_t>& chosen) {
    std::lock_guard lock(mutex_);
    if (chosen.size() < best_.size()) {
      best_ = chosen;
      std::sort(best_.begin(), best_.end());
      best_size_.store(best_.size());
      if (best_.size() <= target_) stop_.store(true);
    }
  }

  const ClosedRows& rows_;
  const std::uint64_t budget_;
  const std::uint64_t target_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> exhausted_{false};
  std::atomic<std::size_t> best_size_;
  mutable std::mutex mutex_;
  std::vector<std::uint32_t> best_;
};

}  // namespace

SolveReport branch_and_bound_gamma(const LevelGraphSpec& spec, const BranchAndBoundOptions& options) {
  const auto start = Clock::now();
  const auto graph = materialize(spec, options.max_vertices);
  const ClosedRows rows(graph);
  const std::uint64_t root_bound = root_lower_bound(graph);

  BranchAndBound search(rows, options.node_budget, root_bound, greedy_cover(graph));
  search.run(std::max(1U, options.workers));

  const auto best = search.best();
  const bool proven = !search.exhausted() || best.size() <= root_bound;
  auto witness = certificate_of(graph, best, Provenance::Exact);
  check_witness(witness);
  return SolveReport{spec,
                     SolveMethod::BranchAndBound,
                     best.size(),
                     std::move(witness),
                     proven,
                     proven ? best.size() : root_bound,
                     search.nodes(),
                     Clock::now() - start};
}

}  // namespace levdom
