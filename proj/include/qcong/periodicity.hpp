#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "qcong/genfun.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// Trial division; fine for l <= 10^6.
bool is_prime(std::uint64_t n);

/// Exponent of l in n. Throws NotPrime / InvalidArgument on bad input.
unsigned ord_prime(std::uint64_t n, std::uint64_t l);
/// n with every factor l removed.
std::uint64_t ell_free_part(std::uint64_t n, std::uint64_t l);

/// Least b >= 0 with l^b >= sum over S (with multiplicity) of l^ord_l(n).
unsigned b_value(const PartMultiset& s, std::uint64_t l);
/// l-free part of lcm(S).
std::uint64_t m_value(const PartMultiset& s, std::uint64_t l);

struct PeriodReport {
  std::uint64_t prime = 0;
  unsigned power = 0;
  PartMultiset parts;
  unsigned b = 0;
  std::uint64_t m = 0;
  /// l^{N+b-1} * m.
  std::uint64_t period = 0;
  std::optional<std::uint64_t> empirical_period;
  /// Meaningful only once empirical_period has been searched for.
  bool agreement = false;
  bool empirical_checked = false;
};

/// Closed-form minimum period of sum p(n;S) q^n modulo l^N.
PeriodReport kwong_period(const PartMultiset& s, std::uint64_t l, unsigned power);

/// Smallest d <= max_period with c(n+d) = c(n) for every n in range, if any.
/// Requires a.order() >= guard * max_period and guard >= 3.
std::optional<std::uint64_t> empirical_period(const Series& a, std::uint64_t max_period, unsigned guard = 3);

/// Builds the restricted-partition series mod l^N at order guard * period and
/// fills empirical_period and agreement. `max_order` bounds the work.
PeriodReport cross_check_period(PeriodReport report, unsigned guard = 3, std::uint64_t max_order = 20'000'000);

nlohmann::json to_json(const PeriodReport& report);

}  // namespace qcong
