#include "levdom/subset.hpp"

#include "levdom/error.hpp"

#include <limits>
#include <sstream>

namespace levdom {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::InvalidVertex: return "invalid-vertex";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidParts: return "invalid-parts";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

void check_ground(int n) {
  if (n < 1 || n > kMaxGroundSet) {
    throw Error(ErrorKind::InvalidParameters,
                "ground set size must be in [1, 64], got " + std::to_string(n));
  }
}

std::uint64_t low_bits(int count) {
  return count == 0 ? 0 : (~std::uint64_t{0} >> (64 - count));
}

void check_element(int element, int n) {
  if (element < 1 || element > n) {
    throw Error(ErrorKind::InvalidParameters,
                "element " + std::to_string(element) + " outside [1, " +
                    std::to_string(n) + "]");
  }
}

}  // namespace

Subset::Subset(std::uint64_t mask, int n) : mask_(mask), n_(n) {
  check_ground(n);
  if ((mask & ~low_bits(n)) != 0) {
    throw Error(ErrorKind::InvalidParameters, "subset mask has bits beyond n");
  }
}

Subset Subset::of(std::initializer_list<int> elements, int n) {
  return from_elements(std::vector<int>(elements), n);
}

Subset Subset::from_elements(const std::vector<int>& elements, int n) {
  check_ground(n);
  std::uint64_t mask = 0;
  for (int e : elements) {
    check_element(e, n);
    mask |= std::uint64_t{1} << (e - 1);
  }
  return Subset(mask, n);
}

Subset Subset::range(int first, int last, int n) {
  check_ground(n);
  if (first > last) return Subset(0, n);
  check_element(first, n);
  check_element(last, n);
  return Subset(low_bits(last) & ~low_bits(first - 1), n);
}

Subset Subset::full(int n) {
  check_ground(n);
  return Subset(low_bits(n), n);
}

Subset Subset::with(int element) const {
  check_element(element, n_);
  return Subset(mask_ | (std::uint64_t{1} << (element - 1)), n_);
}

Subset Subset::without(int element) const {
  check_element(element, n_);
  return Subset(mask_ & ~(std::uint64_t{1} << (element - 1)), n_);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << ']';
  return os.str();
}

namespace {

void check_same_ground(const Subset& a, const Subset& b) {
  if (a.ground_size() != b.ground_size()) {
    throw Error(ErrorKind::InvalidParameters, "subsets over different ground sets");
  }
}

}  // namespace

Subset operator|(const Subset& a, const Subset& b) {
  check_same_ground(a, b);
  return Subset(a.mask_ | b.mask_, a.n_);
}

Subset operator&(const Subset& a, const Subset& b) {
  check_same_ground(a, b);
  return Subset(a.mask_ & b.mask_, a.n_);
}

Subset operator-(const Subset& a, const Subset& b) {
  check_same_ground(a, b);
  return Subset(a.mask_ & ~b.mask_, a.n_);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // C(n, i) grows with i up to n/2, so an overflow at any step means the
  // final value overflows as well.
  unsigned __int128 value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorKind::Overflow, "C(" + std::to_string(n) + "," +
                                           std::to_string(k) +
                                           ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(value);
}

void check_level(int n, int k) {
  if (n < 0 || n > kMaxGroundSet || k < 0 || k > n) {
    throw Error(ErrorKind::InvalidParameters,
                "invalid level: n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

std::vector<Subset> enumerate_k_subsets(int n, int k) {
  check_level(n, k);
  check_ground(n);
  std::vector<Subset> out;
  out.reserve(binomial(n, k));
  for_each_k_mask(n, k, [&](std::uint64_t mask) {
    out.emplace_back(mask, n);
    return true;
  });
  return out;
}

std::uint64_t rank(const Subset& s, int k) {
  if (s.cardinality() != k) {
    throw Error(ErrorKind::InvalidParameters,
                "rank: " + s.to_string() + " does not have " + std::to_string(k) +
                    " elements");
  }
  std::uint64_t index = 0;
  int i = 1;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1, ++i) {
    index += binomial(std::countr_zero(m), i);
  }
  return index;
}

Subset unrank(std::uint64_t index, int n, int k) {
  check_level(n, k);
  check_ground(n);
  if (index >= binomial(n, k)) {
    throw Error(ErrorKind::InvalidParameters,
                "unrank: index " + std::to_string(index) + " out of range");
  }
  std::uint64_t mask = 0;
  int bound = n;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < bound && binomial(c + 1, i) <= index) ++c;
    index -= binomial(c, i);
    mask |= std::uint64_t{1} << c;
    bound = c;
  }
  return Subset(mask, n);
}

Subset PairFamily::union_of_pairs() const {
  Subset all(0, n);
  for (const auto& p : pairs) all = all | p;
  return all;
}

PairFamily spanning_pairs(int n) {
  if (n < 2 || n > kMaxGroundSet) {
    throw Error(ErrorKind::InvalidParameters,
                "spanning_pairs needs 2 <= n <= 64, got " + std::to_string(n));
  }
  PairFamily family{n, {}};
  for (int first = 1; first + 1 <= n; first += 2) {
    family.pairs.push_back(Subset::of({first, first + 1}, n));
  }
  if (n % 2 == 1) family.pairs.push_back(Subset::of({n - 1, n}, n));
  return family;
}

}  // namespace levdom
