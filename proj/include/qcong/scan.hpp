#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcong/congruence.hpp"

namespace qcong {

struct ScanConfig {
  FamilyId family;
  /// A power of two, at least 2.
  std::uint64_t modulus = 2;
  std::uint64_t l_max = 12;
  std::uint64_t bound = 1000;
  /// Progressions with fewer members up to `bound` are skipped; at least 10.
  std::uint64_t min_support = 20;
  unsigned jobs = 1;

  void validate() const;
};

/// A progression on which every checked coefficient had one residue. Never a
/// theorem: `known_label` is set only when the suite already states the claim.
struct Finding {
  CongruenceClaim claim;
  std::uint64_t support = 0;
  std::uint64_t bound = 0;
  std::optional<std::string> known_label;

  bool matches_known() const noexcept { return known_label.has_value(); }
  std::uint64_t residue_value() const { return std::get<ConstantResidue>(claim.kind).c; }
  friend bool operator==(const Finding&, const Finding&) = default;
};

/// For l = 1..l_max and b in [0, l): arguments l n + b <= bound (n >= 1 when
/// b = 0, else n >= 0). Findings implied by a smaller uniform progression
/// (l/p, b mod l/p, same c) for a prime p | l are pruned.
std::vector<Finding> scan_ap_congruences(const ScanConfig& cfg);
/// Same, over an already built series in Mod(cfg.modulus).
std::vector<Finding> scan_series(const Series& a, const ScanConfig& cfg);

/// |{1 <= n <= bound : a(n) == 0 mod m}| / bound.
double empirical_density(const FamilyId& family, std::uint64_t modulus, std::uint64_t bound);
double density_of(const Series& a, std::uint64_t modulus, std::uint64_t bound);

nlohmann::json to_json(const Finding& f);
Finding finding_from_json(const nlohmann::json& j);

/// Appends one JSON object per line.
void persist_findings(const std::vector<Finding>& findings, const std::string& path);

struct LoadedFindings {
  std::vector<Finding> findings;
  std::vector<std::string> warnings;
};
/// Missing file or empty file yields no findings. Malformed lines are skipped
/// with a warning naming the line; repeated labels keep the first occurrence.
LoadedFindings load_findings(const std::string& path);

}  // namespace qcong
