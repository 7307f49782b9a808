#include "levdom/constructions.hpp"

#include "levdom/error.hpp"

#include <bit>

namespace levdom {

namespace {

/// The `count` smallest elements of `set`.
Subset lowest(const Subset& set, int count) {
  std::uint64_t mask = set.mask();
  std::uint64_t out = 0;
  for (int i = 0; i < count && mask != 0; ++i) {
    const std::uint64_t bit = mask & (~mask + 1);
    out |= bit;
    mask ^= bit;
  }
  return Subset(out, set.ground_size());
}

/// Adds the smallest absent elements of [n] until the set has k elements.
Subset pad_to(Subset set, int k) {
  for (int e = 1; set.cardinality() < k; ++e) {
    if (!set.contains(e)) set = set.with(e);
  }
  return set;
}

[[noreturn]] void bad_parts(const std::string& why) {
  throw Error(ErrorKind::InvalidParts, "theorem 1 parts: " + why);
}

}  // namespace

std::vector<Subset> Theorem1Parts::a_family() const {
  return {s, t, p[0], p[1], p[2], p[3]};
}

void validate_parts(const Theorem1Parts& parts, int n, int k) {
  for (const Subset* x : {&parts.s, &parts.t, &parts.s1, &parts.s2, &parts.t1, &parts.t2,
                          &parts.p[0], &parts.p[1], &parts.p[2], &parts.p[3]}) {
    if (x->ground_size() != n) bad_parts("subset over the wrong ground set");
  }
  if (parts.b.n != n) bad_parts("pair family over the wrong ground set");
  if (parts.s.cardinality() != k || parts.t.cardinality() != k) bad_parts("|S| or |T| != k");
  if ((parts.s | parts.t) != Subset::full(n)) bad_parts("S | T != [n]");

  if (k % 2 == 0) {
    const int half = k / 2;
    if (parts.pivot) bad_parts("even k takes no pivot");
    if (parts.s1.cardinality() != half || parts.s2.cardinality() != half ||
        (parts.s1 | parts.s2) != parts.s) {
      bad_parts("S1, S2 are not halves of S");
    }
    if (parts.t1.cardinality() != half || parts.t2.cardinality() != half ||
        (parts.t1 | parts.t2) != parts.t) {
      bad_parts("T1, T2 are not halves of T");
    }
  } else {
    if (!parts.pivot) bad_parts("odd k needs a pivot");
    const int pivot = *parts.pivot;
    if (!parts.s.contains(pivot) || !parts.t.contains(pivot)) bad_parts("pivot not in S & T");
    const int small = (k - 1) / 2;
    const int large = (k + 1) / 2;
    if (parts.s1.cardinality() != small || parts.s2.cardinality() != small ||
        (parts.s1 | parts.s2) != parts.s.without(pivot)) {
      bad_parts("S1, S2 do not split S minus the pivot");
    }
    if (parts.t1.cardinality() != large || parts.t2.cardinality() != large ||
        (parts.t1 | parts.t2) != parts.t ||
        (parts.t1 & parts.t2) != Subset::of({pivot}, n)) {
      bad_parts("T1, T2 do not overlap exactly in the pivot");
    }
  }

  const std::array<Subset, 4> unions = {parts.s1 | parts.t1, parts.s1 | parts.t2,
                                        parts.s2 | parts.t1, parts.s2 | parts.t2};
  for (std::size_t i = 0; i < 4; ++i) {
    if (parts.p[i].cardinality() != k || !unions[i].is_subset_of(parts.p[i])) {
      bad_parts("P" + std::to_string(i + 1) + " is not a k-set padding its union");
    }
  }
}

std::pair<Theorem1Parts, DominationCertificate> theorem1_construct(int n, int k) {
  if (n > kMaxGroundSet) {
    throw Error(ErrorKind::InvalidParameters, "n must be at most 64");
  }
  if (k <= ceil_half(n) || k >= n) {
    throw Error(ErrorKind::OutOfRange, "theorem 1 construction needs ceil(n/2) < k < n, got n=" +
                                           std::to_string(n) + " k=" + std::to_string(k));
  }

  Theorem1Parts parts;
  parts.s = Subset::range(1, k, n);
  parts.t = Subset::range(n - k + 1, n, n);
  if (k % 2 == 0) {
    parts.s1 = lowest(parts.s, k / 2);
    parts.s2 = parts.s - parts.s1;
    parts.t1 = lowest(parts.t, k / 2);
    parts.t2 = parts.t - parts.t1;
  } else {
    // 2k - n >= 1, so S & T is never empty here.
    const int pivot = (parts.s & parts.t).min_element();
    parts.pivot = pivot;
    const Subset s_rest = parts.s.without(pivot);
    parts.s1 = lowest(s_rest, (k - 1) / 2);
    parts.s2 = s_rest - parts.s1;
    const Subset t_rest = parts.t.without(pivot);
    const Subset t_low = lowest(t_rest, (k - 1) / 2);
    parts.t1 = t_low.with(pivot);
    parts.t2 = (t_rest - t_low).with(pivot);
  }
  parts.p = {pad_to(parts.s1 | parts.t1, k), pad_to(parts.s1 | parts.t2, k),
             pad_to(parts.s2 | parts.t1, k), pad_to(parts.s2 | parts.t2, k)};
  parts.b = spanning_pairs(n);

  std::vector<VertexRef> members;
  for (const auto& a : parts.a_family()) members.push_back(VertexRef::upper(a));
  for (const auto& pair : parts.b.pairs) members.push_back(VertexRef::lower(pair));
  DominationCertificate cert(LevelGraphSpec(n, k, 2), std::move(members), Provenance::Theorem1,
                             static_cast<std::uint64_t>(ceil_half(n) + 6));
  return {std::move(parts), std::move(cert)};
}

DominationCertificate theorem2_construct(int n) {
  if (n < 4 || n > kMaxGroundSet) {
    throw Error(ErrorKind::OutOfRange,
                "theorem 2 construction needs 4 <= n <= 64, got " + std::to_string(n));
  }
  return DominationCertificate(LevelGraphSpec(n, n - 1, 2),
                               {VertexRef::upper(Subset::range(1, n - 1, n)),
                                VertexRef::upper(Subset::range(2, n, n)),
                                VertexRef::lower(Subset::of({1, n}, n))},
                               Provenance::Theorem2, 3);
}

namespace {

bool pairs_covered(int n, const std::vector<Subset>& uppers, const std::vector<Subset>& lowers) {
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const std::uint64_t pair = (std::uint64_t{1} << (a - 1)) | (std::uint64_t{1} << (b - 1));
      bool hit = false;
      for (const auto& u : uppers) hit = hit || (pair & ~u.mask()) == 0;
      for (const auto& v : lowers) hit = hit || v.mask() == pair;
      if (!hit) return false;
    }
  }
  return true;
}

bool spans(int n, const std::vector<Subset>& pairs) {
  std::uint64_t covered = 0;
  for (const auto& p : pairs) {
    if (p.cardinality() != 2 || p.ground_size() != n) return false;
    covered |= p.mask();
  }
  return covered == Subset::full(n).mask();
}

}  // namespace

bool verify_theorem1_structural(const Theorem1Parts& parts, int n, int k) {
  validate_parts(parts, n, k);
  if (!pairs_covered(n, parts.a_family(), {})) return false;
  // A k-set avoiding every pair of B meets each pair at most once, so
  // k <= |B| when B spans [n].
  const int half = ceil_half(n);
  return spans(n, parts.b.pairs) && static_cast<int>(parts.b.pairs.size()) == half && k > half;
}

bool verify_structural(const DominationCertificate& cert) {
  const auto& spec = cert.spec();
  if (spec.l() != 2) {
    throw Error(ErrorKind::InvalidInput, "structural verification needs l = 2");
  }
  const auto uppers = cert.upper_members();
  const auto lowers = cert.lower_members();
  if (!pairs_covered(spec.n(), uppers, lowers)) return false;
  return spans(spec.n(), lowers) && static_cast<int>(lowers.size()) < spec.k();
}

VertexRef theorem2_lower_bound_witness(int n, const VertexRef& a, const VertexRef& b) {
  if (n < 4 || n > kMaxGroundSet) {
    throw Error(ErrorKind::InvalidInput, "G_{n-1,2} needs 4 <= n <= 64");
  }
  const LevelGraphSpec spec(n, n - 1, 2);
  if (a.level != Level::Upper || a.set.ground_size() != n || a.set.cardinality() != n - 1) {
    throw Error(ErrorKind::InvalidInput, a.to_string() + " is not of the form [n] \\ {i}");
  }
  if (b.level != Level::Lower || b.set.ground_size() != n || b.set.cardinality() != 2) {
    throw Error(ErrorKind::InvalidInput, b.to_string() + " is not a 2-set vertex");
  }
  const int missing = (Subset::full(n) - a.set).min_element();
  for (int x = 1; x <= n; ++x) {
    if (x == missing) continue;
    const Subset pair = Subset::of({missing, x}, n);
    if (pair != b.set) return VertexRef::lower(pair);
  }
  throw std::logic_error("no undominated pair found");  // unreachable for n >= 4
}

}  // namespace levdom
