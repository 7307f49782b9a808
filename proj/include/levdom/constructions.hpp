#pragma once

#include "levdom/certificate.hpp"

#include <array>
#include <optional>
#include <utility>

namespace levdom {

/// The pieces of the G_{k,2} upper-bound construction for k > ceil(n/2):
/// two k-sets covering [n], their halves, the four mixed unions and a
/// spanning pair family.
struct Theorem1Parts {
  Subset s;
  Subset t;
  Subset s1;
  Subset s2;
  Subset t1;
  Subset t2;
  /// Shared element of S and T used when k is odd.
  std::optional<int> pivot;
  /// P1 = S1|T1, P2 = S1|T2, P3 = S2|T1, P4 = S2|T2, each padded to k elements.
  std::array<Subset, 4> p;
  PairFamily b;

  /// {S, T, P1, P2, P3, P4} in that order (may contain repeats).
  std::vector<Subset> a_family() const;
};

/// Throws InvalidParts if the halving, padding, or pivot invariants fail.
void validate_parts(const Theorem1Parts& parts, int n, int k);

/// Throws OutOfRange unless ceil(n/2) < k < n.
std::pair<Theorem1Parts, DominationCertificate> theorem1_construct(int n, int k);

/// {1..n-1}, {2..n}, {1,n} in G_{n-1,2}. Throws OutOfRange for n < 4.
DominationCertificate theorem2_construct(int n);

/// Polynomial-time check that (i) every pair of [n] lies inside some member
/// of A and (ii) B spans [n] with |B| = ceil(n/2) < k, which forces every
/// k-set to contain a pair of B.
bool verify_theorem1_structural(const Theorem1Parts& parts, int n, int k);

/// The same two conditions read off an arbitrary l = 2 certificate: upper
/// members must cover every pair that is not itself a member, and the lower
/// members must span [n] with fewer pairs than k. A false result means the
/// sufficient conditions fail, not that the certificate is wrong.
bool verify_structural(const DominationCertificate& cert);

/// Given a = [n] \ {i} and a 2-set b in G_{n-1,2}, returns {i, x} for the
/// smallest x != i with {i, x} != b, a pair that neither a nor b dominates.
VertexRef theorem2_lower_bound_witness(int n, const VertexRef& a, const VertexRef& b);

}  // namespace levdom
