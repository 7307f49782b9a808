#include "levdom/error.hpp"
#include "levdom/subset.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace levdom;

namespace {

// Independent generator: recursive choice of elements, then sorted by mask.
void recurse(int n, int k, int next, std::uint64_t mask, std::vector<std::uint64_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (int e = next; e <= n - k + 1; ++e) {
    recurse(n, k - 1, e + 1, mask | (std::uint64_t{1} << (e - 1)), out);
  }
}

std::vector<std::uint64_t> oracle_level(int n, int k) {
  std::vector<std::uint64_t> out;
  recurse(n, k, 1, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("subset basics and text form") {
  const auto s = Subset::of({4, 1, 3}, 5);
  CHECK(s.cardinality() == 3);
  CHECK(s.to_string() == "[1,3,4]");
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min_element() == 1);
  CHECK(Subset::range(2, 4, 5).elements() == std::vector<int>{2, 3, 4});
  CHECK(Subset::range(3, 2, 5).empty());
  CHECK(Subset::full(64).cardinality() == 64);
  CHECK(throws_kind(ErrorKind::InvalidParameters, [] { Subset(0b1000, 3); }));
  CHECK(throws_kind(ErrorKind::InvalidParameters, [] { Subset::of({0}, 3); }));
  CHECK(throws_kind(ErrorKind::InvalidParameters, [] { Subset(0, 65); }));
}

TEST_CASE("enumerate_k_subsets") {
  SUBCASE("empty level") {
    const auto level = enumerate_k_subsets(3, 0);
    REQUIRE(level.size() == 1);
    CHECK(level[0].empty());
  }
  SUBCASE("n=4, k=3") {
    const auto level = enumerate_k_subsets(4, 3);
    REQUIRE(level.size() == 4);
    CHECK(level[0] == Subset::of({1, 2, 3}, 4));
    CHECK(level[1] == Subset::of({1, 2, 4}, 4));
    CHECK(level[2] == Subset::of({1, 3, 4}, 4));
    CHECK(level[3] == Subset::of({2, 3, 4}, 4));
  }
  SUBCASE("n=6, k=3 against the recursive generator") {
    const auto level = enumerate_k_subsets(6, 3);
    const auto oracle = oracle_level(6, 3);
    REQUIRE(level.size() == 20);
    CHECK(level.front() == Subset::of({1, 2, 3}, 6));
    CHECK(level.back() == Subset::of({4, 5, 6}, 6));
    for (std::size_t i = 0; i < level.size(); ++i) CHECK(level[i].mask() == oracle[i]);
  }
  SUBCASE("every level up to n=12 matches the oracle") {
    for (int n = 1; n <= 12; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto level = enumerate_k_subsets(n, k);
        const auto oracle = oracle_level(n, k);
        REQUIRE(level.size() == oracle.size());
        CHECK(level.size() == binomial(n, k));
        for (std::size_t i = 0; i < level.size(); ++i) {
          CHECK(level[i].mask() == oracle[i]);
          CHECK(level[i].cardinality() == k);
        }
      }
    }
  }
  SUBCASE("the top of a 64-element level does not overflow") {
    std::uint64_t count = 0;
    std::uint64_t last = 0;
    for_each_k_mask(64, 63, [&](std::uint64_t m) {
      ++count;
      last = m;
      return true;
    });
    CHECK(count == 64);
    CHECK(last == ~std::uint64_t{1});
  }
  CHECK(throws_kind(ErrorKind::InvalidParameters, [] { enumerate_k_subsets(3, 4); }));
  CHECK(throws_kind(ErrorKind::InvalidParameters, [] { enumerate_k_subsets(65, 1); }));
}

TEST_CASE("binomial matches Pascal's triangle in 128-bit arithmetic") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(3, 5) == 0);

  std::vector<std::vector<unsigned __int128>> pascal(65);
  for (int n = 0; n <= 64; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(static_cast<unsigned __int128>(binomial(n, k)) == pascal[n][k]);
    }
  }
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK(throws_kind(ErrorKind::Overflow, [] { binomial(70, 35); }));
}

TEST_CASE("rank and unrank are inverse bijections") {
  CHECK(rank(Subset::of({1, 2, 3}, 7), 3) == 0);
  CHECK(unrank(binomial(7, 3) - 1, 7, 3) == enumerate_k_subsets(7, 3).back());
  for (std::uint64_t i = 0; i < 35; ++i) CHECK(rank(unrank(i, 7, 3), 3) == i);

  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::uint64_t i = 0;
      for (const auto& s : enumerate_k_subsets(n, k)) {
        CHECK(rank(s, k) == i);
        CHECK(unrank(i, n, k) == s);
        ++i;
      }
    }
  }

  CHECK(throws_kind(ErrorKind::InvalidParameters, [] { rank(Subset::of({1, 2}, 4), 3); }));
  CHECK(throws_kind(ErrorKind::InvalidParameters, [] { unrank(4, 4, 3); }));
}

TEST_CASE("rank/unrank round trip on random wide subsets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    std::uint64_t mask = rng();
    if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
    const Subset s(mask, n);
    const int k = s.cardinality();
    const auto r = rank(s, k);
    CHECK(r < binomial(n, k));
    CHECK(unrank(r, n, k) == s);
  }
}

TEST_CASE("spanning_pairs") {
  const auto four = spanning_pairs(4);
  CHECK(four.pairs == std::vector<Subset>{Subset::of({1, 2}, 4), Subset::of({3, 4}, 4)});

  const auto five = spanning_pairs(5);
  CHECK(five.pairs == std::vector<Subset>{Subset::of({1, 2}, 5), Subset::of({3, 4}, 5),
                                          Subset::of({4, 5}, 5)});

  for (int n = 2; n <= 64; ++n) {
    const auto family = spanning_pairs(n);
    CHECK(family.pairs.size() == static_cast<std::size_t>(ceil_half(n)));
    CHECK(family.union_of_pairs() == Subset::full(n));
    std::set<std::uint64_t> distinct;
    for (const auto& p : family.pairs) {
      CHECK(p.cardinality() == 2);
      distinct.insert(p.mask());
    }
    CHECK(distinct.size() == family.pairs.size());
  }
  CHECK(spanning_pairs(9).pairs.size() == 5);
  CHECK(throws_kind(ErrorKind::InvalidParameters, [] { spanning_pairs(1); }));
}
