#include "qcong/congruence.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "qcong/error.hpp"

namespace qcong {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

VerificationReport vacuous(const CongruenceClaim& claim, std::uint64_t bound, std::string why) {
  VerificationReport r{claim, bound, 0, Pass{}, {}};
  r.warnings.push_back(std::move(why));
  return r;
}

VerificationReport verify_sum(const CongruenceClaim& claim, const SumResidue& sum, std::uint64_t bound,
                              const SeriesSource& source) {
  if (sum.terms.empty()) return vacuous(claim, bound, "sum claim has no terms; vacuously true");
  const std::uint64_t l = claim.ap_modulus;
  const std::uint64_t top = claim.max_offset();
  if (bound < l * claim.n_start + top) return vacuous(claim, bound, "no progression members <= bound");
  const std::uint64_t last_n = (bound - top) / l;
  const std::size_t order = l * last_n + top;
  std::vector<const Series*> series;
  for (const auto& t : sum.terms) series.push_back(&source.series(t.family, claim.modulus, order));

  VerificationReport report{claim, bound, 0, Pass{}, {}};
  const std::uint64_t m = claim.modulus;
  for (std::uint64_t n = claim.n_start; n <= last_n; ++n) {
    std::uint64_t got = 0;
    for (std::size_t i = 0; i < sum.terms.size(); ++i) {
      got = (got + series[i]->residues()[l * n + sum.terms[i].offset]) % m;
    }
    ++report.members;
    if (got != sum.c) {
      report.outcome = Counterexample{n, l * n, got, sum.c};
      return report;
    }
  }
  return report;
}

}  // namespace

bool is_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

bool is_twice_square(std::uint64_t n) { return n % 2 == 0 && is_square(n / 2); }

std::uint64_t odd_divisor_signature(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("odd_divisor_signature needs n >= 1");
  while (n % 2 == 0) n /= 2;
  std::uint64_t count = 1;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

std::string to_string(Predicate p) {
  switch (p) {
    case Predicate::SquareOrTwiceSquare: return "square_or_twice_square";
    case Predicate::OddDivisorSignature: return "odd_divisor_signature";
    case Predicate::OddNonsquareZero: return "odd_nonsquare_zero";
  }
  return "?";
}

Predicate parse_predicate(const std::string& text) {
  for (Predicate p : {Predicate::SquareOrTwiceSquare, Predicate::OddDivisorSignature, Predicate::OddNonsquareZero}) {
    if (to_string(p) == text) return p;
  }
  throw ParseError("unknown predicate '" + text + "'");
}

std::optional<std::uint64_t> predicate_expectation(Predicate p, std::uint64_t arg, std::uint64_t modulus) {
  switch (p) {
    case Predicate::SquareOrTwiceSquare:
      return (is_square(arg) || is_twice_square(arg)) ? 2 % modulus : 0;
    case Predicate::OddDivisorSignature:
      return static_cast<std::uint64_t>((static_cast<unsigned __int128>(2) * odd_divisor_signature(arg)) % modulus);
    case Predicate::OddNonsquareZero:
      if (arg % 2 == 1 && !is_square(arg)) return 0;
      return std::nullopt;
  }
  return std::nullopt;
}

void CongruenceClaim::validate() const {
  if (ap_modulus == 0) throw InvalidArgument(label + ": progression modulus must be >= 1");
  if (modulus < 2 || modulus >= (std::uint64_t{1} << 63)) throw InvalidArgument(label + ": modulus out of range");
  if (const auto* sum = std::get_if<SumResidue>(&kind)) {
    if (sum->c >= modulus) throw InvalidArgument(label + ": residue must be below the modulus");
    return;
  }
  if (residue >= ap_modulus) throw InvalidArgument(label + ": progression residue must be below its modulus");
  if (const auto* c = std::get_if<ConstantResidue>(&kind); c && c->c >= modulus) {
    throw InvalidArgument(label + ": residue must be below the modulus");
  }
}

std::uint64_t CongruenceClaim::max_offset() const {
  if (const auto* sum = std::get_if<SumResidue>(&kind)) {
    std::uint64_t top = 0;
    for (const auto& t : sum->terms) top = std::max(top, t.offset);
    return top;
  }
  return residue;
}

std::vector<FamilyId> CongruenceClaim::families() const {
  if (const auto* sum = std::get_if<SumResidue>(&kind)) {
    std::vector<FamilyId> out;
    for (const auto& t : sum->terms) {
      if (std::find(out.begin(), out.end(), t.family) == out.end()) out.push_back(t.family);
    }
    return out;
  }
  if (const auto* eq = std::get_if<EquivalentTo>(&kind)) return {family, eq->other};
  return {family};
}

std::string progression_text(std::uint64_t l, std::uint64_t b) {
  std::string out = l == 1 ? "n" : std::to_string(l) + "n";
  if (b > 0) out += "+" + std::to_string(b);
  return out;
}

void SeriesCache::require(const FamilyId& family, std::uint64_t modulus, std::size_t order) {
  auto& e = entries_[{family.spec(), modulus}];
  e.family = family;
  e.modulus = modulus;
  if (order > e.order) {
    e.order = order;
    if (e.series && e.series->order() < order) e.series.reset();
  }
}

void SeriesCache::require(const CongruenceClaim& claim, std::uint64_t bound) {
  for (const auto& f : claim.families()) require(f, claim.modulus, bound);
}

void SeriesCache::build(unsigned jobs) {
  std::vector<Entry*> pending;
  for (auto& [key, e] : entries_) {
    if (!e.series) pending.push_back(&e);
  }
  // Largest first so long builds start early.
  std::sort(pending.begin(), pending.end(), [](const Entry* a, const Entry* b) { return a->order > b->order; });
  detail::parallel_for(pending.size(), jobs, [&](std::size_t i) {
    Entry& e = *pending[i];
    e.series = build_series_fast(e.family, e.order, CoefficientRing::modulo(e.modulus));
    ++builds_;
  });
}

const Series& SeriesCache::series(const FamilyId& family, std::uint64_t modulus, std::size_t min_order) const {
  const auto it = entries_.find({family.spec(), modulus});
  if (it == entries_.end() || !it->second.series) {
    throw SeriesOrderTooSmall("no series built for " + family.spec() + " mod " + std::to_string(modulus));
  }
  if (it->second.series->order() < min_order) {
    throw SeriesOrderTooSmall("series " + family.spec() + " mod " + std::to_string(modulus) + " has order " +
                              std::to_string(it->second.series->order()) + ", need " + std::to_string(min_order));
  }
  return *it->second.series;
}

VerificationReport verify_claim(const CongruenceClaim& claim, std::uint64_t bound, const SeriesSource& source) {
  claim.validate();
  if (const auto* sum = std::get_if<SumResidue>(&claim.kind)) return verify_sum(claim, *sum, bound, source);

  const std::uint64_t l = claim.ap_modulus;
  const std::uint64_t first = l * claim.n_start + claim.residue;
  if (first > bound) return vacuous(claim, bound, "no progression members <= bound");
  const std::uint64_t last_n = (bound - claim.residue) / l;
  const std::size_t order = l * last_n + claim.residue;

  const std::uint64_t m = claim.modulus;
  const auto& a = source.series(claim.family, m, order).residues();
  const std::uint64_t* other = nullptr;
  if (const auto* eq = std::get_if<EquivalentTo>(&claim.kind)) {
    other = source.series(eq->other, m, order).residues().data();
  }

  VerificationReport report{claim, bound, 0, Pass{}, {}};
  for (std::uint64_t n = claim.n_start; n <= last_n; ++n) {
    const std::uint64_t arg = l * n + claim.residue;
    std::optional<std::uint64_t> expected;
    if (const auto* c = std::get_if<ConstantResidue>(&claim.kind)) {
      expected = c->c;
    } else if (other) {
      expected = other[arg];
    } else {
      expected = predicate_expectation(std::get<PredicateResidue>(claim.kind).predicate, arg, m);
    }
    if (!expected) continue;
    ++report.members;
    if (a[arg] != *expected) {
      report.outcome = Counterexample{n, arg, a[arg], *expected};
      return report;
    }
  }
  if (report.members == 0) report.warnings.push_back("no constrained progression members <= bound");
  return report;
}

VerificationReport verify_claim(const CongruenceClaim& claim, std::uint64_t bound) {
  claim.validate();
  SeriesCache cache;
  cache.require(claim, bound);
  cache.build(1);
  return verify_claim(claim, bound, cache);
}

VerificationReport verify_sum_claim(const std::vector<SumTerm>& terms, std::uint64_t l, std::uint64_t c,
                                    std::uint64_t modulus, std::uint64_t bound, std::uint64_t n_start) {
  CongruenceClaim claim;
  claim.family = terms.empty() ? FamilyId::overpartition() : terms.front().family;
  claim.ap_modulus = l;
  claim.n_start = n_start;
  claim.modulus = modulus;
  claim.kind = SumResidue{terms, c};
  claim.label = "sum-" + std::to_string(l) + "n-mod" + std::to_string(modulus);
  return verify_claim(claim, bound);
}

std::vector<VerificationReport> verify_claims(const std::vector<CongruenceClaim>& claims,
                                              std::optional<std::uint64_t> bound, unsigned jobs,
                                              SeriesCache* cache) {
  SeriesCache local;
  SeriesCache& store = cache ? *cache : local;
  std::vector<std::uint64_t> bounds;
  for (const auto& claim : claims) {
    claim.validate();
    const std::uint64_t b = bound.value_or(claim.default_bound);
    if (b == 0) throw InvalidArgument(claim.label + ": no bound given and the claim has no default");
    bounds.push_back(b);
    store.require(claim, b);
  }
  store.build(jobs);

  std::vector<std::optional<VerificationReport>> slots(claims.size());
  detail::parallel_for(claims.size(), jobs,
                       [&](std::size_t i) { slots[i] = verify_claim(claims[i], bounds[i], store); });
  std::vector<VerificationReport> reports;
  for (auto& s : slots) reports.push_back(std::move(*s));
  std::stable_sort(reports.begin(), reports.end(),
                   [](const auto& a, const auto& b) { return a.claim.label < b.claim.label; });
  return reports;
}

const CongruenceClaim* find_claim(const std::string& label) {
  const auto& suite = builtin_suite();
  for (const auto& c : suite) {
    if (c.label == label) return &c;
  }
  std::vector<const CongruenceClaim*> hits;
  for (const auto& c : suite) {
    if (c.label.rfind(label, 0) == 0) hits.push_back(&c);
  }
  if (hits.size() > 1) {
    std::string names;
    for (const auto* h : hits) names += " " + h->label;
    throw InvalidArgument("label prefix '" + label + "' is ambiguous:" + names);
  }
  return hits.empty() ? nullptr : hits.front();
}

Series build_series_fast(const FamilyId& family, std::size_t order, CoefficientRing ring) {
  switch (family.kind) {
    case FamilyKind::Overpartition:
      return inverse_of_unit(phi_series(Sign::Minus, order, ring));
    case FamilyKind::OddOverpartition: {
      const Series half = inverse_of_unit(phi_series(Sign::Minus, order / 2, ring));
      return mul(phi_series(Sign::Plus, order, ring), dilate(half, 2, order));
    }
    default:
      return build_series(family, order, ring);
  }
}

nlohmann::json to_json(const ClaimKind& kind) {
  return std::visit(
      [](const auto& k) -> nlohmann::json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantResidue>) {
          return {{"type", "constant"}, {"c", k.c}};
        } else if constexpr (std::is_same_v<K, EquivalentTo>) {
          return {{"type", "equivalent"}, {"other", k.other.spec()}};
        } else if constexpr (std::is_same_v<K, PredicateResidue>) {
          return {{"type", "predicate"}, {"predicate", to_string(k.predicate)}};
        } else {
          nlohmann::json terms = nlohmann::json::array();
          for (const auto& t : k.terms) terms.push_back({{"family", t.family.spec()}, {"offset", t.offset}});
          return {{"type", "sum"}, {"terms", terms}, {"c", k.c}};
        }
      },
      kind);
}

ClaimKind claim_kind_from_json(const nlohmann::json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "constant") return ConstantResidue{j.at("c").get<std::uint64_t>()};
    if (type == "equivalent") return EquivalentTo{FamilyId::parse(j.at("other").get<std::string>())};
    if (type == "predicate") return PredicateResidue{parse_predicate(j.at("predicate").get<std::string>())};
    if (type == "sum") {
      SumResidue s;
      for (const auto& t : j.at("terms")) {
        s.terms.push_back({FamilyId::parse(t.at("family").get<std::string>()), t.at("offset").get<std::uint64_t>()});
      }
      s.c = j.value("c", std::uint64_t{0});
      return s;
    }
    throw ParseError("unknown claim kind '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad claim kind: ") + e.what());
  }
}

nlohmann::json to_json(const CongruenceClaim& claim) {
  nlohmann::json j = {
      {"label", claim.label},
      {"family", claim.family.spec()},
      {"ap", {{"l", claim.ap_modulus}, {"b", claim.residue}, {"n_start", claim.n_start}}},
      {"modulus", claim.modulus},
      {"kind", to_json(claim.kind)},
  };
  if (claim.default_bound) j["bound"] = claim.default_bound;
  return j;
}

CongruenceClaim claim_from_json(const nlohmann::json& j) {
  try {
    CongruenceClaim c;
    c.family = FamilyId::parse(j.at("family").get<std::string>());
    const auto& ap = j.at("ap");
    c.ap_modulus = ap.value("l", std::uint64_t{1});
    c.residue = ap.value("b", std::uint64_t{0});
    c.n_start = ap.value("n_start", std::uint64_t{1});
    c.modulus = j.at("modulus").get<std::uint64_t>();
    c.kind = claim_kind_from_json(j.at("kind"));
    c.default_bound = j.value("bound", std::uint64_t{0});
    c.label = j.value("label", c.family.short_name() + "-" + progression_text(c.ap_modulus, c.residue) + "-mod" +
                                   std::to_string(c.modulus));
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad claim: ") + e.what());
  }
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = to_json(r.claim);
  j.erase("bound");
  j["bound"] = r.bound;
  j["members"] = r.members;
  if (const auto* ce = std::get_if<Counterexample>(&r.outcome)) {
    j["outcome"] = "counterexample";
    j["counterexample"] = {{"n", ce->n}, {"arg", ce->arg}, {"got", ce->got}, {"expected", ce->expected}};
  } else {
    j["outcome"] = "pass";
  }
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

}  // namespace qcong
