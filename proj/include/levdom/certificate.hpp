#pragma once

#include "levdom/level_graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace levdom {

enum class Provenance { Theorem1, Theorem2, Greedy, Exact, External };

const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& name);

/// A vertex family claimed to dominate G_{k,l}. Members are kept sorted
/// (Upper first, then colex) without duplicates.
class DominationCertificate {
public:
  /// Validates every member against spec and the provenance size limits
  /// (Theorem1: at most ceil(n/2)+6 members, Theorem2: exactly 3).
  DominationCertificate(const LevelGraphSpec& spec, std::vector<VertexRef> members,
                        Provenance provenance,
                        std::optional<std::uint64_t> claimed_size_bound = std::nullopt);

  const LevelGraphSpec& spec() const noexcept { return spec_; }
  const std::vector<VertexRef>& members() const noexcept { return members_; }
  Provenance provenance() const noexcept { return provenance_; }
  std::optional<std::uint64_t> claimed_size_bound() const noexcept { return claimed_size_bound_; }
  std::size_t size() const noexcept { return members_.size(); }

  std::vector<Subset> upper_members() const;
  std::vector<Subset> lower_members() const;

  friend bool operator==(const DominationCertificate&, const DominationCertificate&) = default;

private:
  LevelGraphSpec spec_;
  std::vector<VertexRef> members_;
  Provenance provenance_;
  std::optional<std::uint64_t> claimed_size_bound_;
};

nlohmann::json to_json(const DominationCertificate& cert);
/// Throws InvalidInput on malformed documents.
DominationCertificate certificate_from_json(const nlohmann::json& doc);

DominationCertificate read_certificate(const std::string& path);
void write_certificate(const DominationCertificate& cert, const std::string& path);

inline constexpr std::uint64_t kDefaultVerifyCap = 5'000'000;

struct VerifyResult {
  bool verified = false;
  /// The colex-least (smallest mask, either level) undominated vertex.
  std::optional<VertexRef> witness;
};

/// Exhaustive domination check over both levels. Throws TooLarge when
/// C(n,k) + C(n,l) exceeds cap.
VerifyResult verify_certificate(const DominationCertificate& cert,
                                std::uint64_t cap = kDefaultVerifyCap);

}  // namespace levdom
