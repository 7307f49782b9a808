#include "levdom/error.hpp"
#include "levdom/level_graph.hpp"

#include <doctest.h>

#include <random>

using namespace levdom;

namespace {

VertexRef up(std::initializer_list<int> e, int n) { return VertexRef::upper(Subset::of(e, n)); }
VertexRef down(std::initializer_list<int> e, int n) { return VertexRef::lower(Subset::of(e, n)); }

}  // namespace

TEST_CASE("spec validity") {
  CHECK_NOTHROW(LevelGraphSpec(4, 3, 2));
  CHECK_THROWS_AS(LevelGraphSpec(4, 4, 2), Error);
  CHECK_THROWS_AS(LevelGraphSpec(4, 2, 2), Error);
  CHECK_THROWS_AS(LevelGraphSpec(4, 3, 0), Error);
  CHECK_THROWS_AS(LevelGraphSpec(65, 3, 2), Error);
}

TEST_CASE("adjacency is containment across levels") {
  const LevelGraphSpec spec(4, 3, 2);
  CHECK(adjacent(spec, up({1, 2, 3}, 4), down({1, 3}, 4)));
  CHECK(adjacent(spec, down({1, 3}, 4), up({1, 2, 3}, 4)));
  CHECK_FALSE(adjacent(spec, up({1, 2, 3}, 4), down({1, 4}, 4)));
  CHECK_FALSE(adjacent(spec, up({1, 2, 3}, 4), up({1, 2, 4}, 4)));
  CHECK_FALSE(adjacent(spec, down({1, 2}, 4), down({1, 2}, 4)));
  CHECK_THROWS_AS(adjacent(spec, up({1, 2}, 4), down({1, 2}, 4)), Error);
}

TEST_CASE("neighbor enumeration") {
  const LevelGraphSpec small(5, 3, 2);
  const auto below = neighbors_down(small, up({1, 2, 5}, 5));
  CHECK(below == std::vector<VertexRef>{down({1, 2}, 5), down({1, 5}, 5), down({2, 5}, 5)});

  const LevelGraphSpec g432(4, 3, 2);
  CHECK(neighbors_up(g432, down({1, 4}, 4)) ==
        std::vector<VertexRef>{up({1, 2, 4}, 4), up({1, 3, 4}, 4)});
  CHECK(neighbors_up(LevelGraphSpec(6, 4, 2), down({2, 5}, 6)).size() == 6);
  CHECK_THROWS_AS(neighbors_up(g432, up({1, 2, 3}, 4)), Error);
  CHECK_THROWS_AS(neighbors_down(g432, down({1, 2}, 4)), Error);

  std::mt19937 rng(3);
  const LevelGraphSpec wide(8, 5, 2);
  const auto uppers = enumerate_k_subsets(8, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = VertexRef::upper(uppers[rng() % uppers.size()]);
    const auto vs = neighbors_down(wide, u);
    CHECK(vs.size() == 10);
    for (const auto& v : vs) CHECK(adjacent(wide, u, v));
  }
}

TEST_CASE("up and down neighborhoods mirror each other for n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int l = 1; l < k; ++l) {
        const LevelGraphSpec spec(n, k, l);
        std::size_t down_edges = 0;
        for (const auto& u : enumerate_k_subsets(n, k)) {
          const auto below = neighbors_down(spec, VertexRef::upper(u));
          CHECK(below.size() == binomial(k, l));
          CHECK(std::is_sorted(below.begin(), below.end()));
          for (const auto& v : below) {
            const auto above = neighbors_up(spec, v);
            CHECK(std::find(above.begin(), above.end(), VertexRef::upper(u)) != above.end());
          }
          down_edges += below.size();
        }
        std::size_t up_edges = 0;
        for (const auto& v : enumerate_k_subsets(n, l)) {
          const auto above = neighbors_up(spec, VertexRef::lower(v));
          CHECK(above.size() == binomial(n - l, k - l));
          CHECK(std::is_sorted(above.begin(), above.end()));
          for (const auto& u : above) CHECK(adjacent(spec, u, VertexRef::lower(v)));
          up_edges += above.size();
        }
        CHECK(up_edges == down_edges);
      }
    }
  }
}

TEST_CASE("graph_stats") {
  const auto a = graph_stats(LevelGraphSpec(4, 3, 2));
  CHECK(a.vertex_count == 10);
  CHECK(a.edge_count == 12);
  const auto b = graph_stats(LevelGraphSpec(6, 4, 2));
  CHECK(b.vertex_count == 30);
  CHECK(b.edge_count == 90);
  CHECK(b.upper_degree == 6);
  CHECK(b.lower_degree == 6);

  for (int n = 3; n <= 12; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int l = 1; l < k; ++l) {
        const LevelGraphSpec spec(n, k, l);
        const auto s = graph_stats(spec);
        CHECK(s.vertex_count == binomial(n, k) + binomial(n, l));
        CHECK(binomial(n, k) * binomial(k, l) == binomial(n, l) * binomial(n - l, k - l));
        CHECK(s.edge_count == binomial(n, l) * s.lower_degree);
      }
    }
  }
  // Far past anything that could be materialized.
  CHECK(graph_stats(LevelGraphSpec(60, 40, 2)).upper_degree == 780);
}

TEST_CASE("materialize") {
  const auto g = materialize(LevelGraphSpec(4, 3, 2));
  CHECK(g.vertex_count() == 10);
  for (std::uint32_t v = 0; v < g.upper_count(); ++v) CHECK(g.degree(v) == 3);
  CHECK(g.edge_count() == 12);

  const LevelGraphSpec spec(8, 4, 2);
  const auto big = materialize(spec);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = static_cast<std::uint32_t>(rng() % big.vertex_count());
    const auto b = static_cast<std::uint32_t>(rng() % big.vertex_count());
    const auto& row = big.neighbors(a);
    const bool listed = std::find(row.begin(), row.end(), b) != row.end();
    CHECK(listed == adjacent(spec, big.vertex_at(a), big.vertex_at(b)));
  }
  for (std::uint32_t v = 0; v < big.vertex_count(); ++v) {
    CHECK(big.index_of(big.vertex_at(v)) == v);
  }

  CHECK_THROWS_AS(materialize(LevelGraphSpec(20, 10, 2)), Error);
  try {
    materialize(LevelGraphSpec(20, 10, 2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("materialized graphs are bipartite, regular and satisfy the handshake lemma") {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int l = 1; l < k; ++l) {
        const LevelGraphSpec spec(n, k, l);
        const auto g = materialize(spec);
        std::uint64_t degree_sum = 0;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
          const auto expected = g.level_of(v) == Level::Upper ? binomial(k, l)
                                                              : binomial(n - l, k - l);
          CHECK(g.degree(v) == expected);
          for (auto w : g.neighbors(v)) CHECK(g.level_of(w) != g.level_of(v));
          degree_sum += g.degree(v);
        }
        CHECK(degree_sum == 2 * graph_stats(spec).edge_count);
      }
    }
  }
}
