#pragma once

#include "levdom/subset.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace levdom {

/// The bipartite graph G_{k,l} between levels k and l of the n-cube.
/// Construction enforces n > k > l >= 1 and n <= 64.
class LevelGraphSpec {
public:
  LevelGraphSpec(int n, int k, int l);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }

  std::uint64_t upper_count() const { return binomial(n_, k_); }
  std::uint64_t lower_count() const { return binomial(n_, l_); }

  std::string to_string() const;

  friend bool operator==(const LevelGraphSpec&, const LevelGraphSpec&) = default;

private:
  int n_;
  int k_;
  int l_;
};

enum class Level : std::uint8_t { Upper = 0, Lower = 1 };

const char* to_string(Level level);

struct VertexRef {
  Level level = Level::Upper;
  Subset set;

  static VertexRef upper(const Subset& s) { return {Level::Upper, s}; }
  static VertexRef lower(const Subset& s) { return {Level::Lower, s}; }

  std::string to_string() const;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  /// Upper before Lower, then colex within a level.
  friend auto operator<=>(const VertexRef& a, const VertexRef& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    return a.set <=> b.set;
  }
};

/// Throws InvalidVertex unless v has the cardinality its level requires.
void check_vertex(const LevelGraphSpec& spec, const VertexRef& v);

bool adjacent(const LevelGraphSpec& spec, const VertexRef& u, const VertexRef& v);

/// The C(k,l) lower vertices contained in an upper vertex, colex order.
std::vector<VertexRef> neighbors_down(const LevelGraphSpec& spec, const VertexRef& u);

/// The C(n-l,k-l) upper vertices containing a lower vertex, colex order.
std::vector<VertexRef> neighbors_up(const LevelGraphSpec& spec, const VertexRef& v);

/// Deposits the bits of `pattern` into the set positions of `support`
/// (software pdep): bit j of pattern selects the j-th lowest element.
std::uint64_t deposit_bits(std::uint64_t pattern, std::uint64_t support);

struct GraphStats {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t upper_degree = 0;
  std::uint64_t lower_degree = 0;
};

GraphStats graph_stats(const LevelGraphSpec& spec);

inline constexpr std::uint64_t kDefaultMaterializeCap = 50'000;

/// Explicit adjacency of G_{k,l}. Vertex index = rank for Upper vertices and
/// C(n,k) + rank for Lower vertices, so Upper vertices come first.
class MaterializedGraph {
public:
  const LevelGraphSpec& spec() const noexcept { return spec_; }

  std::uint32_t vertex_count() const noexcept {
    return static_cast<std::uint32_t>(adjacency_.size());
  }
  std::uint32_t upper_count() const noexcept { return upper_count_; }

  const std::vector<std::uint32_t>& neighbors(std::uint32_t index) const {
    return adjacency_.at(index);
  }
  std::size_t degree(std::uint32_t index) const { return neighbors(index).size(); }

  std::uint32_t index_of(const VertexRef& v) const;
  VertexRef vertex_at(std::uint32_t index) const;
  Level level_of(std::uint32_t index) const noexcept {
    return index < upper_count_ ? Level::Upper : Level::Lower;
  }
  std::uint64_t rank_of(std::uint32_t index) const noexcept {
    return index < upper_count_ ? index : index - upper_count_;
  }

  std::uint64_t edge_count() const;

private:
  friend MaterializedGraph materialize(const LevelGraphSpec&, std::uint64_t);

  explicit MaterializedGraph(const LevelGraphSpec& spec) : spec_(spec) {}

  LevelGraphSpec spec_;
  std::uint32_t upper_count_ = 0;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Throws TooLarge if the vertex count exceeds max_vertices.
MaterializedGraph materialize(const LevelGraphSpec& spec,
                              std::uint64_t max_vertices = kDefaultMaterializeCap);

}  // namespace levdom
