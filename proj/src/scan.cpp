#include "qcong/scan.hpp"

#include <fstream>
#include <set>
#include <tuple>
#include <unordered_set>

#include "parallel.hpp"
#include "qcong/error.hpp"
#include "qcong/periodicity.hpp"

namespace qcong {

namespace {

bool is_power_of_two(std::uint64_t m) { return m >= 2 && (m & (m - 1)) == 0; }

std::string candidate_label(const FamilyId& family, std::uint64_t l, std::uint64_t b, std::uint64_t modulus) {
  return "scan-" + family.short_name() + "-" + progression_text(l, b) + "-mod" + std::to_string(modulus);
}

std::optional<std::string> known_label_for(const FamilyId& family, std::uint64_t l, std::uint64_t b, std::uint64_t c,
                                           std::uint64_t modulus) {
  for (const auto& k : builtin_suite()) {
    const auto* constant = std::get_if<ConstantResidue>(&k.kind);
    if (constant && k.family == family && k.modulus == modulus && k.ap_modulus == l && k.residue == b &&
        constant->c == c) {
      return k.label;
    }
  }
  return std::nullopt;
}

Finding make_finding(const FamilyId& family, std::uint64_t l, std::uint64_t b, std::uint64_t c, std::uint64_t modulus,
                     std::uint64_t support, std::uint64_t bound, std::optional<std::string> known) {
  Finding f;
  f.claim.family = family;
  f.claim.ap_modulus = l;
  f.claim.residue = b;
  f.claim.n_start = b == 0 ? 1 : 0;
  f.claim.modulus = modulus;
  f.claim.kind = ConstantResidue{c};
  f.claim.label = known ? *known : candidate_label(family, l, b, modulus);
  f.support = support;
  f.bound = bound;
  f.known_label = std::move(known);
  return f;
}

struct Uniform {
  std::uint64_t b, c, support;
};

}  // namespace

void ScanConfig::validate() const {
  if (!is_power_of_two(modulus)) throw InvalidArgument("scan modulus must be a power of two >= 2");
  if (min_support < 10) throw InvalidArgument("min_support must be at least 10");
  if (l_max == 0) throw InvalidArgument("l_max must be positive");
  if (bound == 0) throw InvalidArgument("bound must be positive");
}

std::vector<Finding> scan_series(const Series& a, const ScanConfig& cfg) {
  cfg.validate();
  if (a.ring() != CoefficientRing::modulo(cfg.modulus)) {
    throw IncompatibleSeries("scan series must be over Mod(" + std::to_string(cfg.modulus) + ")");
  }
  if (a.order() < cfg.bound) {
    throw SeriesOrderTooSmall("scan needs order " + std::to_string(cfg.bound) + ", series has " +
                              std::to_string(a.order()));
  }
  const auto r = a.residues();
  std::vector<std::vector<Uniform>> per_l(cfg.l_max + 1);
  detail::parallel_for(cfg.l_max, cfg.jobs, [&](std::size_t i) {
    const std::uint64_t l = i + 1;
    for (std::uint64_t b = 0; b < l; ++b) {
      const std::uint64_t first = b == 0 ? l : b;
      if (first > cfg.bound) continue;
      const std::uint64_t support = (cfg.bound - first) / l + 1;
      if (support < cfg.min_support) continue;
      const std::uint64_t c = r[first];
      bool uniform = true;
      for (std::uint64_t arg = first; arg <= cfg.bound && uniform; arg += l) uniform = r[arg] == c;
      if (uniform) per_l[l].push_back({b, c, support});
    }
  });

  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> found;
  std::vector<Finding> out;
  for (std::uint64_t l = 1; l <= cfg.l_max; ++l) {
    for (const auto& u : per_l[l]) {
      found.insert({l, u.b, u.c});
      bool implied = false;
      for (std::uint64_t p = 2; p <= l && !implied; ++p) {
        if (l % p != 0 || !is_prime(p)) continue;
        const std::uint64_t lp = l / p;
        implied = found.count({lp, u.b % lp, u.c}) > 0;
      }
      if (implied) continue;
      out.push_back(make_finding(cfg.family, l, u.b, u.c, cfg.modulus, u.support, cfg.bound,
                                 known_label_for(cfg.family, l, u.b, u.c, cfg.modulus)));
    }
  }
  return out;
}

std::vector<Finding> scan_ap_congruences(const ScanConfig& cfg) {
  cfg.validate();
  return scan_series(build_series_fast(cfg.family, cfg.bound, CoefficientRing::modulo(cfg.modulus)), cfg);
}

double density_of(const Series& a, std::uint64_t modulus, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("density bound must be positive");
  if (a.order() < bound) {
    throw SeriesOrderTooSmall("density needs order " + std::to_string(bound) + ", series has " +
                              std::to_string(a.order()));
  }
  std::uint64_t zeros = 0;
  for (std::uint64_t n = 1; n <= bound; ++n) zeros += a.residue(n, modulus) == 0;
  return static_cast<double>(zeros) / static_cast<double>(bound);
}

double empirical_density(const FamilyId& family, std::uint64_t modulus, std::uint64_t bound) {
  return density_of(build_series_fast(family, bound, CoefficientRing::modulo(modulus)), modulus, bound);
}

nlohmann::json to_json(const Finding& f) {
  return {
      {"family", f.claim.family.spec()},
      {"l", f.claim.ap_modulus},
      {"b", f.claim.residue},
      {"c", f.residue_value()},
      {"modulus", f.claim.modulus},
      {"support", f.support},
      {"bound", f.bound},
      {"status", f.known_label ? "matches_known:" + *f.known_label : std::string("candidate")},
  };
}

Finding finding_from_json(const nlohmann::json& j) {
  try {
    const std::string status = j.at("status").get<std::string>();
    std::optional<std::string> known;
    const std::string prefix = "matches_known:";
    if (status.rfind(prefix, 0) == 0) {
      known = status.substr(prefix.size());
      if (known->empty()) throw ParseError("matches_known status without a label");
    } else if (status != "candidate") {
      throw ParseError("unknown finding status '" + status + "'");
    }
    Finding f = make_finding(FamilyId::parse(j.at("family").get<std::string>()), j.at("l").get<std::uint64_t>(),
                             j.at("b").get<std::uint64_t>(), j.at("c").get<std::uint64_t>(),
                             j.at("modulus").get<std::uint64_t>(), j.at("support").get<std::uint64_t>(),
                             j.at("bound").get<std::uint64_t>(), known);
    f.claim.validate();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad finding: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("bad finding: ") + e.what());
  }
}

void persist_findings(const std::vector<Finding>& findings, const std::string& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open " + path + " for appending");
  for (const auto& f : findings) out << to_json(f).dump() << '\n';
  if (!out) throw Error("write to " + path + " failed");
}

LoadedFindings load_findings(const std::string& path) {
  LoadedFindings loaded;
  std::ifstream in(path);
  if (!in) return loaded;
  std::unordered_set<std::string> seen;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Finding f = finding_from_json(nlohmann::json::parse(line));
      if (!seen.insert(f.claim.label).second) {
        loaded.warnings.push_back("line " + std::to_string(number) + ": duplicate label " + f.claim.label +
                                  " ignored");
        continue;
      }
      loaded.findings.push_back(std::move(f));
    } catch (const nlohmann::json::exception& e) {
      loaded.warnings.push_back("line " + std::to_string(number) + ": malformed JSON: " + e.what());
    } catch (const ParseError& e) {
      loaded.warnings.push_back("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return loaded;
}

}  // namespace qcong
