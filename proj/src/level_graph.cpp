#include "levdom/level_graph.hpp"

#include "levdom/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace levdom {

LevelGraphSpec::LevelGraphSpec(int n, int k, int l) : n_(n), k_(k), l_(l) {
  if (!(n > k && k > l && l >= 1) || n > kMaxGroundSet) {
    throw Error(ErrorKind::InvalidParameters,
                "invalid level graph " + to_string() + ": need 64 >= n > k > l >= 1");
  }
}

std::string LevelGraphSpec::to_string() const {
  return "(n=" + std::to_string(n_) + ",k=" + std::to_string(k_) +
         ",l=" + std::to_string(l_) + ")";
}

const char* to_string(Level level) {
  return level == Level::Upper ? "upper" : "lower";
}

std::string VertexRef::to_string() const {
  return std::string(levdom::to_string(level)) + " " + set.to_string();
}

void check_vertex(const LevelGraphSpec& spec, const VertexRef& v) {
  const int want = v.level == Level::Upper ? spec.k() : spec.l();
  if (v.set.ground_size() != spec.n() || v.set.cardinality() != want) {
    throw Error(ErrorKind::InvalidVertex,
                v.to_string() + " is not a vertex of G" + spec.to_string());
  }
}

bool adjacent(const LevelGraphSpec& spec, const VertexRef& u, const VertexRef& v) {
  check_vertex(spec, u);
  check_vertex(spec, v);
  if (u.level == v.level) return false;
  const auto& upper = u.level == Level::Upper ? u : v;
  const auto& lower = u.level == Level::Upper ? v : u;
  return lower.set.is_subset_of(upper.set);
}

std::uint64_t deposit_bits(std::uint64_t pattern, std::uint64_t support) {
  std::uint64_t out = 0;
  for (; support != 0 && pattern != 0; support &= support - 1, pattern >>= 1) {
    if (pattern & 1U) out |= support & (~support + 1);
  }
  return out;
}

std::vector<VertexRef> neighbors_down(const LevelGraphSpec& spec, const VertexRef& u) {
  check_vertex(spec, u);
  if (u.level != Level::Upper) {
    throw Error(ErrorKind::InvalidVertex, "neighbors_down needs an upper vertex");
  }
  std::vector<VertexRef> out;
  out.reserve(binomial(spec.k(), spec.l()));
  // Deposit preserves order, so colex order of patterns gives colex order of
  // the resulting subsets.
  for_each_k_mask(spec.k(), spec.l(), [&](std::uint64_t pattern) {
    out.push_back(VertexRef::lower(Subset(deposit_bits(pattern, u.set.mask()), spec.n())));
    return true;
  });
  return out;
}

std::vector<VertexRef> neighbors_up(const LevelGraphSpec& spec, const VertexRef& v) {
  check_vertex(spec, v);
  if (v.level != Level::Lower) {
    throw Error(ErrorKind::InvalidVertex, "neighbors_up needs a lower vertex");
  }
  const std::uint64_t outside = Subset::full(spec.n()).mask() & ~v.set.mask();
  std::vector<VertexRef> out;
  out.reserve(binomial(spec.n() - spec.l(), spec.k() - spec.l()));
  std::vector<std::uint64_t> masks;
  for_each_k_mask(spec.n() - spec.l(), spec.k() - spec.l(), [&](std::uint64_t pattern) {
    masks.push_back(deposit_bits(pattern, outside) | v.set.mask());
    return true;
  });
  // Adding fixed bits can break the colex order of the free part.
  std::sort(masks.begin(), masks.end());
  for (auto m : masks) out.push_back(VertexRef::upper(Subset(m, spec.n())));
  return out;
}

GraphStats graph_stats(const LevelGraphSpec& spec) {
  GraphStats stats;
  const std::uint64_t upper = spec.upper_count();
  const std::uint64_t lower = spec.lower_count();
  stats.upper_degree = binomial(spec.k(), spec.l());
  stats.lower_degree = binomial(spec.n() - spec.l(), spec.k() - spec.l());
  const unsigned __int128 vertices = static_cast<unsigned __int128>(upper) + lower;
  const unsigned __int128 edges = static_cast<unsigned __int128>(upper) * stats.upper_degree;
  const unsigned __int128 edges_dual =
      static_cast<unsigned __int128>(lower) * stats.lower_degree;
  constexpr auto kMax = static_cast<unsigned __int128>(~std::uint64_t{0});
  if (vertices > kMax || edges > kMax) {
    throw Error(ErrorKind::Overflow, "graph statistics exceed 64 bits for " + spec.to_string());
  }
  if (edges != edges_dual) {
    throw std::logic_error("double counting identity failed for " + spec.to_string());
  }
  stats.vertex_count = static_cast<std::uint64_t>(vertices);
  stats.edge_count = static_cast<std::uint64_t>(edges);
  return stats;
}

std::uint32_t MaterializedGraph::index_of(const VertexRef& v) const {
  check_vertex(spec_, v);
  const std::uint64_t r = rank(v.set, v.set.cardinality());
  return static_cast<std::uint32_t>(v.level == Level::Upper ? r : upper_count_ + r);
}

VertexRef MaterializedGraph::vertex_at(std::uint32_t index) const {
  if (index >= vertex_count()) {
    throw Error(ErrorKind::InvalidVertex, "vertex index out of range");
  }
  if (index < upper_count_) {
    return VertexRef::upper(unrank(index, spec_.n(), spec_.k()));
  }
  return VertexRef::lower(unrank(index - upper_count_, spec_.n(), spec_.l()));
}

std::uint64_t MaterializedGraph::edge_count() const {
  std::uint64_t degrees = 0;
  for (const auto& row : adjacency_) degrees += row.size();
  return degrees / 2;
}

MaterializedGraph materialize(const LevelGraphSpec& spec, std::uint64_t max_vertices) {
  const std::uint64_t upper = spec.upper_count();
  const std::uint64_t lower = spec.lower_count();
  if (upper + lower > max_vertices) {
    throw Error(ErrorKind::TooLarge, "G" + spec.to_string() + " has " +
                                         std::to_string(upper + lower) +
                                         " vertices, cap is " + std::to_string(max_vertices));
  }
  MaterializedGraph graph(spec);
  graph.upper_count_ = static_cast<std::uint32_t>(upper);
  graph.adjacency_.resize(upper + lower);
  std::uint32_t u = 0;
  for_each_k_mask(spec.n(), spec.k(), [&](std::uint64_t upper_mask) {
    auto& row = graph.adjacency_[u];
    row.reserve(binomial(spec.k(), spec.l()));
    for_each_k_mask(spec.k(), spec.l(), [&](std::uint64_t pattern) {
      const Subset down(deposit_bits(pattern, upper_mask), spec.n());
      const auto v = static_cast<std::uint32_t>(upper + rank(down, spec.l()));
      row.push_back(v);
      graph.adjacency_[v].push_back(u);
      return true;
    });
    ++u;
    return true;
  });
  return graph;
}

}  // namespace levdom
