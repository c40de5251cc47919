#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qcong/genfun.hpp"
#include "qcong/series.hpp"

namespace qcong {

bool is_square(std::uint64_t n);
bool is_twice_square(std::uint64_t n);
/// Number of odd divisors of n: product over odd primes p | n of (ord_p(n) + 1).
std::uint64_t odd_divisor_signature(std::uint64_t n);

enum class Predicate {
  /// 2 if the argument is a square or twice a square, else 0.
  SquareOrTwiceSquare,
  /// 2 * odd_divisor_signature(argument).
  OddDivisorSignature,
  /// 0 at odd nonsquare arguments; other arguments are unconstrained.
  OddNonsquareZero,
};

std::string to_string(Predicate p);
Predicate parse_predicate(const std::string& text);
/// Expected value mod `modulus`, or nullopt when the predicate says nothing.
std::optional<std::uint64_t> predicate_expectation(Predicate p, std::uint64_t arg, std::uint64_t modulus);

struct ConstantResidue {
  std::uint64_t c = 0;
  friend bool operator==(const ConstantResidue&, const ConstantResidue&) = default;
};
struct EquivalentTo {
  FamilyId other;
  friend bool operator==(const EquivalentTo&, const EquivalentTo&) = default;
};
struct PredicateResidue {
  Predicate predicate = Predicate::SquareOrTwiceSquare;
  friend bool operator==(const PredicateResidue&, const PredicateResidue&) = default;
};
struct SumTerm {
  FamilyId family;
  std::uint64_t offset = 0;
  friend bool operator==(const SumTerm&, const SumTerm&) = default;
};
/// sum_i a_i(l n + offset_i) == c. The claim's own residue is ignored.
struct SumResidue {
  std::vector<SumTerm> terms;
  std::uint64_t c = 0;
  friend bool operator==(const SumResidue&, const SumResidue&) = default;
};

using ClaimKind = std::variant<ConstantResidue, EquivalentTo, PredicateResidue, SumResidue>;

/// a(l n + b) satisfies `kind` modulo `modulus` for every n >= n_start.
struct CongruenceClaim {
  std::string label;
  FamilyId family;
  std::uint64_t ap_modulus = 1;
  std::uint64_t residue = 0;
  std::uint64_t n_start = 0;
  std::uint64_t modulus = 2;
  ClaimKind kind = ConstantResidue{0};
  /// Bound used when the caller does not supply one; 0 means unspecified.
  std::uint64_t default_bound = 0;

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
  /// Largest offset from l n that the claim reads.
  std::uint64_t max_offset() const;
  /// Every (family, modulus) series the claim reads.
  std::vector<FamilyId> families() const;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

/// "12n", "6n+3", "n+1".
std::string progression_text(std::uint64_t l, std::uint64_t b);

struct Pass {
  friend bool operator==(const Pass&, const Pass&) = default;
};
struct Counterexample {
  std::uint64_t n = 0;
  std::uint64_t arg = 0;
  std::uint64_t got = 0;
  std::uint64_t expected = 0;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  CongruenceClaim claim;
  std::uint64_t bound = 0;
  /// Progression members actually compared.
  std::uint64_t members = 0;
  std::variant<Pass, Counterexample> outcome;
  std::vector<std::string> warnings;

  bool passed() const noexcept { return std::holds_alternative<Pass>(outcome); }
};

/// Supplies pre-built series over Mod(modulus).
class SeriesSource {
 public:
  virtual ~SeriesSource() = default;
  /// Throws SeriesOrderTooSmall when nothing of sufficient order is available.
  virtual const Series& series(const FamilyId& family, std::uint64_t modulus, std::size_t min_order) const = 0;
};

/// Builds each (family, modulus) once, at the largest order requested before build().
class SeriesCache : public SeriesSource {
 public:
  void require(const FamilyId& family, std::uint64_t modulus, std::size_t order);
  void require(const CongruenceClaim& claim, std::uint64_t bound);
  /// Builds every pending series on up to `jobs` threads.
  void build(unsigned jobs = 1);

  const Series& series(const FamilyId& family, std::uint64_t modulus, std::size_t min_order) const override;
  std::size_t builds() const noexcept { return builds_.load(); }

 private:
  struct Entry {
    FamilyId family;
    std::uint64_t modulus = 0;
    std::size_t order = 0;
    std::optional<Series> series;
  };
  std::map<std::pair<std::string, std::uint64_t>, Entry> entries_;
  std::atomic<std::size_t> builds_{0};
};

/// Checks every argument l n + b <= bound with n >= n_start.
VerificationReport verify_claim(const CongruenceClaim& claim, std::uint64_t bound, const SeriesSource& source);
/// Convenience overload that builds its own series.
VerificationReport verify_claim(const CongruenceClaim& claim, std::uint64_t bound);

/// Checks sum_i terms_i.family(l n + offset_i) == c (mod modulus) for
/// n_start <= n with l n + max offset <= bound. No terms: vacuous pass with a warning.
VerificationReport verify_sum_claim(const std::vector<SumTerm>& terms, std::uint64_t l, std::uint64_t c,
                                    std::uint64_t modulus, std::uint64_t bound, std::uint64_t n_start = 0);

/// Verifies every claim at `bound` (or its default bound), building shared
/// series once. Reports come back sorted by label.
std::vector<VerificationReport> verify_claims(const std::vector<CongruenceClaim>& claims,
                                              std::optional<std::uint64_t> bound, unsigned jobs = 1,
                                              SeriesCache* cache = nullptr);

/// Every congruence the library knows as a theorem, with stable labels.
const std::vector<CongruenceClaim>& builtin_suite();
/// Exact label match, else a unique label prefix; nullptr otherwise.
/// Throws InvalidArgument when the prefix is ambiguous.
const CongruenceClaim* find_claim(const std::string& label);

/// Builds the generating function by the fastest available route: the
/// overpartition series via 1/phi(-q), everything else via build_series.
Series build_series_fast(const FamilyId& family, std::size_t order, CoefficientRing ring);

nlohmann::json to_json(const ClaimKind& kind);
ClaimKind claim_kind_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CongruenceClaim& claim);
/// Missing n_start defaults to 1; missing label to a generated one.
CongruenceClaim claim_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerificationReport& report);

}  // namespace qcong
