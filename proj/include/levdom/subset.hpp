#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace levdom {

inline constexpr int kMaxGroundSet = 64;

/// A subset of the ground set [n] = {1..n}. Element i lives at bit i-1.
class Subset {
public:
  Subset() = default;

  /// Throws InvalidParameters if n is outside [1, 64] or a bit >= n is set.
  Subset(std::uint64_t mask, int n);

  /// Builds a subset from 1-based elements; duplicates are ignored.
  static Subset of(std::initializer_list<int> elements, int n);
  static Subset from_elements(const std::vector<int>& elements, int n);
  /// The interval {first..last}; empty if first > last.
  static Subset range(int first, int last, int n);
  static Subset full(int n);

  std::uint64_t mask() const noexcept { return mask_; }
  int ground_size() const noexcept { return n_; }
  int cardinality() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }

  bool contains(int element) const noexcept {
    return element >= 1 && element <= n_ && ((mask_ >> (element - 1)) & 1U) != 0;
  }
  bool is_subset_of(const Subset& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  Subset with(int element) const;
  Subset without(int element) const;

  /// Smallest element, or 0 for the empty set.
  int min_element() const noexcept {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }

  /// Sorted ascending 1-based elements.
  std::vector<int> elements() const;

  /// Canonical text form, e.g. "[1,3,4]".
  std::string to_string() const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    return a.mask_ == b.mask_ && a.n_ == b.n_;
  }
  /// Colexicographic order, which for equal n is ascending mask value.
  friend auto operator<=>(const Subset& a, const Subset& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

private:
  std::uint64_t mask_ = 0;
  int n_ = 1;
};

/// Exact C(n, k); 0 when k > n. Throws Overflow past 2^64 - 1.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// The colex successor of a k-bit mask (Gosper's hack). Undefined for the
/// last subset of a level.
inline std::uint64_t next_colex(std::uint64_t mask) noexcept {
  const std::uint64_t low = mask & (~mask + 1);
  const std::uint64_t ripple = mask + low;
  return (((ripple ^ mask) >> 2) / low) | ripple;
}

void check_level(int n, int k);

/// Calls fn(mask) on every k-subset of [n] in ascending mask order. Stops
/// early, returning false, if fn returns false.
template <typename Fn>
bool for_each_k_mask(int n, int k, Fn&& fn) {
  check_level(n, k);
  std::uint64_t mask = k == 0 ? 0 : (~std::uint64_t{0} >> (64 - k));
  const std::uint64_t last = k == 0 ? 0 : mask << (n - k);
  for (;;) {
    if (!fn(mask)) return false;
    if (mask == last) return true;
    mask = next_colex(mask);
  }
}

std::vector<Subset> enumerate_k_subsets(int n, int k);

/// Position of s in the colex order of its level (combinatorial number system).
std::uint64_t rank(const Subset& s, int k);
Subset unrank(std::uint64_t index, int n, int k);

/// 2-element subsets of [n] whose union is expected to be [n].
struct PairFamily {
  int n = 0;
  std::vector<Subset> pairs;

  Subset union_of_pairs() const;
};

/// ceil(n/2) consecutive pairs {1,2},{3,4},...; odd n ends with {n-1,n}.
PairFamily spanning_pairs(int n);

inline int ceil_half(int n) { return (n + 1) / 2; }

}  // namespace levdom
