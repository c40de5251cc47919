#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "qcong/congruence.hpp"
#include "qcong/enumerate.hpp"
#include "qcong/error.hpp"
#include "qcong/genfun.hpp"
#include "qcong/periodicity.hpp"
#include "qcong/scan.hpp"

namespace qcong::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string format = "text";
  std::string out_path;
};

struct FamilyArgs {
  std::string name;
  std::uint64_t k = 0;
  std::string parts;

  // Accepts the compact forms (plk:4, restricted:1,2) as well as --k / --parts.
  FamilyId resolve() const {
    if (name == "plk") {
      if (k == 0) throw InvalidArgument("family plk needs --k K with K >= 1");
      return FamilyId::k_rowed(k);
    }
    if (name == "restricted") {
      if (parts.empty()) throw InvalidArgument("family restricted needs --parts a,b,c");
      return FamilyId::restricted(PartMultiset::parse(parts));
    }
    return FamilyId::parse(name);
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", common.out_path, "Write output to this file instead of stdout");
}

void add_family(CLI::App* cmd, FamilyArgs& family) {
  cmd->add_option("family", family.name, "over | oddover | plane | plk | restricted | ncolor")->required();
  cmd->add_option("--k", family.k, "Row bound for plk");
  cmd->add_option("--parts", family.parts, "Comma-separated parts for restricted, repeats allowed");
}

unsigned resolve_jobs(unsigned requested) {
  if (const char* env = std::getenv("QC_JOBS"); env && *env) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("QC_JOBS must be a positive integer, got '") + env + "'");
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path);
  if (!file) throw Error("cannot open " + common.out_path + " for writing");
  file << text;
  if (!file) throw Error("write to " + common.out_path + " failed");
}

std::string kind_text(const ClaimKind& kind) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantResidue>) {
          return "constant:" + std::to_string(k.c);
        } else if constexpr (std::is_same_v<K, EquivalentTo>) {
          return "equivalent:" + k.other.spec();
        } else if constexpr (std::is_same_v<K, PredicateResidue>) {
          return "predicate:" + to_string(k.predicate);
        } else {
          return "sum:" + std::to_string(k.c);
        }
      },
      kind);
}

int cmd_expand(const FamilyArgs& fa, std::size_t order, std::uint64_t modulus, const Common& common,
               std::ostream& out) {
  const FamilyId family = fa.resolve();
  const auto ring = modulus ? CoefficientRing::modulo(modulus) : CoefficientRing::exact();
  const Series s = build_series_fast(family, order, ring);
  std::ostringstream text;
  if (common.format == "json") {
    json coeffs = json::array();
    for (std::size_t i = 0; i <= order; ++i) {
      if (ring.is_exact()) {
        coeffs.push_back(s.coeff(i).get_str());
      } else {
        coeffs.push_back(s.residues()[i]);
      }
    }
    text << json{{"family", family.spec()}, {"order", order}, {"ring", ring.to_string()}, {"coeffs", coeffs}}.dump(2)
         << '\n';
  } else if (common.format == "csv") {
    text << "n,coeff\n";
    for (std::size_t i = 0; i <= order; ++i) text << i << ',' << s.coeff(i).get_str() << '\n';
  } else {
    for (std::size_t i = 0; i <= order; ++i) text << s.coeff(i).get_str() << '\n';
  }
  emit(common, text.str(), out);
  return kExitOk;
}

std::vector<CongruenceClaim> load_claim_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open claim file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  std::vector<CongruenceClaim> claims;
  if (j.is_array()) {
    for (const auto& item : j) claims.push_back(claim_from_json(item));
  } else {
    claims.push_back(claim_from_json(j));
  }
  return claims;
}

std::vector<CongruenceClaim> suite_group(const std::string& name) {
  std::vector<CongruenceClaim> out;
  for (const auto& c : builtin_suite()) {
    if (name == "all" || name == "mod" + std::to_string(c.modulus)) out.push_back(c);
  }
  if (out.empty()) throw InvalidArgument("unknown or empty suite '" + name + "' (all, mod4, mod8, mod12, mod64)");
  return out;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& labels, const std::string& claim_path,
               std::uint64_t bound, unsigned jobs, const Common& common, std::ostream& out) {
  std::vector<CongruenceClaim> claims;
  if (!suite.empty()) claims = suite_group(suite);
  for (const auto& label : labels) {
    const CongruenceClaim* c = find_claim(label);
    if (!c) throw InvalidArgument("no builtin claim labelled '" + label + "'");
    claims.push_back(*c);
  }
  if (!claim_path.empty()) {
    for (auto& c : load_claim_file(claim_path)) claims.push_back(std::move(c));
  }
  if (claims.empty()) throw InvalidArgument("nothing to verify: give --suite, --label or --claim");

  const std::optional<std::uint64_t> override = bound ? std::optional(bound) : std::nullopt;
  // Single-claim runs without a bound fall back to a conservative default.
  for (auto& c : claims) {
    if (!override && c.default_bound == 0) c.default_bound = 2000;
  }
  const auto reports = verify_claims(claims, override, resolve_jobs(jobs));

  std::size_t failed = 0;
  std::ostringstream text;
  if (common.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    text << arr.dump(2) << '\n';
  } else if (common.format == "csv") {
    text << "label,family,l,b,n_start,modulus,kind,bound,members,outcome,n,arg,got,expected\n";
    for (const auto& r : reports) {
      const auto& c = r.claim;
      text << c.label << ',' << c.family.spec() << ',' << c.ap_modulus << ',' << c.residue << ',' << c.n_start << ','
           << c.modulus << ',' << kind_text(c.kind) << ',' << r.bound << ',' << r.members << ',';
      if (const auto* ce = std::get_if<Counterexample>(&r.outcome)) {
        text << "counterexample," << ce->n << ',' << ce->arg << ',' << ce->got << ',' << ce->expected << '\n';
      } else {
        text << "pass,,,,\n";
      }
    }
  }
  for (const auto& r : reports) {
    const auto* ce = std::get_if<Counterexample>(&r.outcome);
    failed += ce != nullptr;
    if (common.format != "text") continue;
    text << (ce ? "FAIL " : "PASS ") << r.claim.label << "  bound=" << r.bound << " members=" << r.members;
    if (ce) text << "  counterexample n=" << ce->n << " arg=" << ce->arg << " got=" << ce->got
                 << " expected=" << ce->expected;
    text << '\n';
    for (const auto& w : r.warnings) text << "  warning: " << w << '\n';
  }
  if (common.format == "text") text << reports.size() - failed << " passed, " << failed << " failed\n";
  emit(common, text.str(), out);
  return failed ? kExitCounterexample : kExitOk;
}

int cmd_period(const std::string& parts, std::uint64_t prime, unsigned power, bool empirical, unsigned guard,
               const Common& common, std::ostream& out) {
  PeriodReport r = kwong_period(PartMultiset::parse(parts), prime, power);
  if (empirical) r = cross_check_period(r, guard);
  std::ostringstream text;
  if (common.format == "json") {
    text << to_json(r).dump(2) << '\n';
  } else if (common.format == "csv") {
    text << "parts,prime,power,b,m,period,empirical_period,agreement\n";
    text << '"' << r.parts.to_string() << "\"," << r.prime << ',' << r.power << ',' << r.b << ',' << r.m << ','
         << r.period << ',';
    if (r.empirical_checked) {
      text << (r.empirical_period ? std::to_string(*r.empirical_period) : "none") << ','
           << (r.agreement ? "yes" : "no");
    } else {
      text << ',';
    }
    text << '\n';
  } else {
    text << "parts " << r.parts.to_string() << "\nprime " << r.prime << "\npower " << r.power << "\nb " << r.b
         << "\nm " << r.m << "\nperiod " << r.period << '\n';
    if (r.empirical_checked) {
      text << "empirical " << (r.empirical_period ? std::to_string(*r.empirical_period) : "none") << '\n'
           << "agreement " << (r.agreement ? "yes" : "no") << '\n';
    }
  }
  emit(common, text.str(), out);
  return kExitOk;
}

int cmd_enumerate(const FamilyArgs& fa, std::uint64_t n, std::uint64_t max_rows, bool diagrams,
                  std::uint64_t budget, const Common& common, std::ostream& out) {
  const FamilyId family = fa.resolve();
  std::optional<std::uint64_t> rows = max_rows ? std::optional(max_rows) : std::nullopt;
  std::uint64_t count = 0;
  std::vector<std::string> pictures;
  switch (family.kind) {
    case FamilyKind::KRowedPlaneOverpartition:
      rows = family.rows;
      [[fallthrough]];
    case FamilyKind::PlaneOverpartition:
      if (diagrams) {
        for_each_plane_overpartition(
            n, rows, [&](const PlaneOverpartition& p) { pictures.push_back(p.render()); }, budget);
        count = pictures.size();
      } else {
        count = count_plane_overpartitions(n, rows, budget);
      }
      break;
    case FamilyKind::Overpartition:
      if (diagrams) {
        for_each_overpartition(n, [&](const Overpartition& o) { pictures.push_back(o.render()); });
        count = pictures.size();
      } else {
        count = count_overpartitions(n, false);
      }
      break;
    case FamilyKind::OddOverpartition:
      count = count_overpartitions(n, true);
      break;
    case FamilyKind::RestrictedPartition:
      count = count_partitions_multiset(n, family.parts);
      break;
    case FamilyKind::NColorOverpartition:
      count = count_ncolor_overpartitions(n);
      break;
  }
  if (diagrams && pictures.empty() && count > 0) {
    throw InvalidArgument("--diagrams is available for plane, plk and over only");
  }

  std::ostringstream text;
  if (common.format == "json") {
    json j = {{"family", family.spec()}, {"n", n}, {"count", count}};
    if (diagrams) j["diagrams"] = pictures;
    text << j.dump(2) << '\n';
  } else if (common.format == "csv") {
    text << "family,n,count\n" << family.spec() << ',' << n << ',' << count << '\n';
  } else {
    for (const auto& p : pictures) text << p << "\n\n";
    text << count << '\n';
  }
  emit(common, text.str(), out);
  return kExitOk;
}

int cmd_scan(const FamilyArgs& fa, ScanConfig cfg, const std::string& persist, unsigned jobs, const Common& common,
             std::ostream& out) {
  cfg.family = fa.resolve();
  cfg.jobs = resolve_jobs(jobs);
  const auto findings = scan_ap_congruences(cfg);
  if (!persist.empty()) persist_findings(findings, persist);
  std::ostringstream text;
  if (common.format == "json") {
    json arr = json::array();
    for (const auto& f : findings) arr.push_back(to_json(f));
    text << arr.dump(2) << '\n';
  } else if (common.format == "csv") {
    text << "family,l,b,c,modulus,support,bound,status\n";
    for (const auto& f : findings) {
      const json j = to_json(f);
      text << f.claim.family.spec() << ',' << f.claim.ap_modulus << ',' << f.claim.residue << ',' << f.residue_value()
           << ',' << f.claim.modulus << ',' << f.support << ',' << f.bound << ','
           << j.at("status").get<std::string>() << '\n';
    }
  } else {
    for (const auto& f : findings) {
      text << progression_text(f.claim.ap_modulus, f.claim.residue) << " -> " << f.residue_value() << " mod "
           << f.claim.modulus << "  support=" << f.support << "  "
           << (f.known_label ? "matches " + *f.known_label : std::string("candidate")) << '\n';
    }
  }
  emit(common, text.str(), out);
  return kExitOk;
}

int cmd_density(const FamilyArgs& fa, std::uint64_t modulus, std::uint64_t bound, const Common& common,
                std::ostream& out) {
  const FamilyId family = fa.resolve();
  const double d = empirical_density(family, modulus, bound);
  std::ostringstream text;
  if (common.format == "json") {
    text << json{{"family", family.spec()}, {"modulus", modulus}, {"bound", bound}, {"density", d}}.dump(2) << '\n';
  } else if (common.format == "csv") {
    text << "family,modulus,bound,density\n" << family.spec() << ',' << modulus << ',' << bound << ',' << d << '\n';
  } else {
    text << d << '\n';
  }
  emit(common, text.str(), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated q-series, partition oracles and congruence checks"};
  app.name("qcong");
  app.require_subcommand(1);

  Common common;
  FamilyArgs family;

  auto* expand = app.add_subcommand("expand", "Print coefficients c_0..c_N of a generating function");
  std::size_t order = 0;
  std::uint64_t modulus = 0;
  add_family(expand, family);
  expand->add_option("--order", order, "Truncation order N")->required();
  expand->add_option("--mod", modulus, "Reduce modulo m (default: exact)")->check(CLI::Range(2ull, (1ull << 63) - 1));
  add_common(expand, common);

  auto* verify = app.add_subcommand("verify", "Check congruence claims");
  std::string suite;
  std::vector<std::string> labels;
  std::string claim_path;
  std::uint64_t bound = 0;
  unsigned jobs = 0;
  verify->add_option("--suite", suite, "Builtin group: all, mod4, mod8, mod12, mod64");
  verify->add_option("--label", labels, "Builtin claim label or unique prefix (repeatable)");
  verify->add_option("--claim", claim_path, "JSON file holding a claim object or an array of claims");
  verify->add_option("--bound", bound, "Largest argument checked (default: each claim's own bound)");
  verify->add_option("--jobs", jobs, "Worker threads (QC_JOBS overrides)");
  add_common(verify, common);

  auto* period = app.add_subcommand("period", "Closed-form period of sum p(n;S) q^n modulo l^N");
  std::string parts;
  std::uint64_t prime = 0;
  unsigned power = 0;
  bool empirical = false;
  unsigned guard = 3;
  period->add_option("--parts", parts, "Multiset S, e.g. 1,1,2,5")->required();
  period->add_option("--prime", prime, "Prime l")->required();
  period->add_option("--power", power, "Exponent N >= 1")->required();
  period->add_flag("--empirical", empirical, "Also detect the period from the series");
  period->add_option("--guard", guard, "Order multiplier for the empirical check (>= 3)");
  add_common(period, common);

  auto* enumerate = app.add_subcommand("enumerate", "Count objects by brute force");
  std::uint64_t n = 0;
  std::uint64_t max_rows = 0;
  bool diagrams = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
  add_family(enumerate, family);
  enumerate->add_option("--n", n, "Weight")->required();
  enumerate->add_option("--max-rows", max_rows, "Row bound for plane overpartitions");
  enumerate->add_flag("--diagrams", diagrams, "Print every object");
  enumerate->add_option("--budget", budget, "Cell-visit budget for plane enumeration");
  add_common(enumerate, common);

  auto* scan = app.add_subcommand("scan", "Search arithmetic progressions for constant residues");
  ScanConfig cfg;
  std::string persist;
  add_family(scan, family);
  scan->add_option("--mod", cfg.modulus, "Power-of-two modulus")->required();
  scan->add_option("--lmax", cfg.l_max, "Largest progression modulus");
  scan->add_option("--bound", cfg.bound, "Largest argument checked")->required();
  scan->add_option("--min-support", cfg.min_support, "Minimum progression members (>= 10)");
  scan->add_option("--persist", persist, "Append findings to this JSONL file");
  scan->add_option("--jobs", jobs, "Worker threads (QC_JOBS overrides)");
  add_common(scan, common);

  auto* density = app.add_subcommand("density", "Fraction of 1 <= n <= bound with a(n) == 0 mod m");
  std::uint64_t density_mod = 0;
  std::uint64_t density_bound = 0;
  add_family(density, family);
  density->add_option("--mod", density_mod, "Modulus")->required()->check(CLI::Range(2ull, (1ull << 63) - 1));
  density->add_option("--bound", density_bound, "Bound")->required();
  add_common(density, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*expand) return cmd_expand(family, order, modulus, common, out);
    if (*verify) return cmd_verify(suite, labels, claim_path, bound, jobs, common, out);
    if (*period) return cmd_period(parts, prime, power, empirical, guard, common, out);
    if (*enumerate) return cmd_enumerate(family, n, max_rows, diagrams, budget, common, out);
    if (*scan) return cmd_scan(family, cfg, persist, jobs, common, out);
    if (*density) return cmd_density(family, density_mod, density_bound, common, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace qcong::cli
