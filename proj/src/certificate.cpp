#include "levdom/certificate.hpp"

#include "levdom/error.hpp"

#include <algorithm>
#include <fstream>

namespace levdom {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Theorem1: return "theorem1";
    case Provenance::Theorem2: return "theorem2";
    case Provenance::Greedy: return "greedy";
    case Provenance::Exact: return "exact";
    case Provenance::External: return "external";
  }
  return "external";
}

Provenance provenance_from_string(const std::string& name) {
  for (auto p : {Provenance::Theorem1, Provenance::Theorem2, Provenance::Greedy,
                 Provenance::Exact, Provenance::External}) {
    if (name == to_string(p)) return p;
  }
  throw Error(ErrorKind::InvalidInput, "unknown provenance '" + name + "'");
}

DominationCertificate::DominationCertificate(const LevelGraphSpec& spec,
                                             std::vector<VertexRef> members,
                                             Provenance provenance,
                                             std::optional<std::uint64_t> claimed_size_bound)
    : spec_(spec),
      members_(std::move(members)),
      provenance_(provenance),
      claimed_size_bound_(claimed_size_bound) {
  for (const auto& v : members_) check_vertex(spec_, v);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

  if (provenance_ == Provenance::Theorem1 &&
      members_.size() > static_cast<std::size_t>(ceil_half(spec_.n()) + 6)) {
    throw Error(ErrorKind::InvalidInput,
                "theorem1 certificate has " + std::to_string(members_.size()) +
                    " members, more than ceil(n/2)+6");
  }
  if (provenance_ == Provenance::Theorem2 && members_.size() != 3) {
    throw Error(ErrorKind::InvalidInput, "theorem2 certificate must have exactly 3 members");
  }
}

std::vector<Subset> DominationCertificate::upper_members() const {
  std::vector<Subset> out;
  for (const auto& v : members_) {
    if (v.level == Level::Upper) out.push_back(v.set);
  }
  return out;
}

std::vector<Subset> DominationCertificate::lower_members() const {
  std::vector<Subset> out;
  for (const auto& v : members_) {
    if (v.level == Level::Lower) out.push_back(v.set);
  }
  return out;
}

nlohmann::json to_json(const DominationCertificate& cert) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& v : cert.members()) {
    members.push_back({{"level", to_string(v.level)}, {"elements", v.set.elements()}});
  }
  nlohmann::json doc = {
      {"n", cert.spec().n()},
      {"k", cert.spec().k()},
      {"l", cert.spec().l()},
      {"provenance", to_string(cert.provenance())},
      {"members", std::move(members)},
  };
  if (cert.claimed_size_bound()) doc["claimed_size_bound"] = *cert.claimed_size_bound();
  return doc;
}

DominationCertificate certificate_from_json(const nlohmann::json& doc) {
  try {
    const LevelGraphSpec spec(doc.at("n").get<int>(), doc.at("k").get<int>(),
                              doc.at("l").get<int>());
    const auto provenance = provenance_from_string(doc.at("provenance").get<std::string>());
    std::vector<VertexRef> members;
    for (const auto& m : doc.at("members")) {
      const auto level_name = m.at("level").get<std::string>();
      Level level;
      if (level_name == "upper") {
        level = Level::Upper;
      } else if (level_name == "lower") {
        level = Level::Lower;
      } else {
        throw Error(ErrorKind::InvalidInput, "unknown level '" + level_name + "'");
      }
      members.push_back(
          {level, Subset::from_elements(m.at("elements").get<std::vector<int>>(), spec.n())});
    }
    std::optional<std::uint64_t> bound;
    if (doc.contains("claimed_size_bound")) {
      bound = doc.at("claimed_size_bound").get<std::uint64_t>();
    }
    return DominationCertificate(spec, std::move(members), provenance, bound);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("invalid certificate: ") + e.what());
  }
}

DominationCertificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
  return certificate_from_json(doc);
}

void write_certificate(const DominationCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << to_json(cert).dump() << '\n';
}

VerifyResult verify_certificate(const DominationCertificate& cert, std::uint64_t cap) {
  const auto& spec = cert.spec();
  const unsigned __int128 total =
      static_cast<unsigned __int128>(spec.upper_count()) + spec.lower_count();
  if (total > cap) {
    throw Error(ErrorKind::TooLarge, "verifying G" + spec.to_string() +
                                         " needs more than " + std::to_string(cap) +
                                         " vertex checks");
  }

  std::vector<std::uint64_t> uppers;
  std::vector<std::uint64_t> lowers;
  for (const auto& v : cert.members()) {
    (v.level == Level::Upper ? uppers : lowers).push_back(v.set.mask());
  }

  // Both scans run in ascending mask order, so the first miss of each level
  // is that level's colex-least undominated vertex.
  std::optional<std::uint64_t> upper_miss;
  for_each_k_mask(spec.n(), spec.k(), [&](std::uint64_t u) {
    bool hit = std::find(uppers.begin(), uppers.end(), u) != uppers.end();
    for (std::size_t i = 0; !hit && i < lowers.size(); ++i) hit = (lowers[i] & ~u) == 0;
    if (!hit) upper_miss = u;
    return hit;
  });
  std::optional<std::uint64_t> lower_miss;
  for_each_k_mask(spec.n(), spec.l(), [&](std::uint64_t v) {
    if (upper_miss && v > *upper_miss) return false;
    bool hit = std::find(lowers.begin(), lowers.end(), v) != lowers.end();
    for (std::size_t i = 0; !hit && i < uppers.size(); ++i) hit = (v & ~uppers[i]) == 0;
    if (!hit) lower_miss = v;
    return hit;
  });

  VerifyResult result;
  if (lower_miss) {
    result.witness = VertexRef::lower(Subset(*lower_miss, spec.n()));
  } else if (upper_miss) {
    result.witness = VertexRef::upper(Subset(*upper_miss, spec.n()));
  }
  result.verified = !result.witness.has_value();
  return result;
}

}  // namespace levdom
