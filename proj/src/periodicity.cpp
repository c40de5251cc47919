#include "qcong/periodicity.hpp"

#include <numeric>

#include "qcong/error.hpp"

namespace qcong {

namespace {

void require_prime(std::uint64_t l) {
  if (!is_prime(l)) throw NotPrime(std::to_string(l) + " is not prime");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) throw InvalidArgument("period does not fit in 64 bits");
  return static_cast<std::uint64_t>(p);
}

std::uint64_t prime_power(std::uint64_t l, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, l);
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned ord_prime(std::uint64_t n, std::uint64_t l) {
  if (n == 0) throw InvalidArgument("ord_prime needs n >= 1");
  require_prime(l);
  unsigned e = 0;
  while (n % l == 0) {
    n /= l;
    ++e;
  }
  return e;
}

std::uint64_t ell_free_part(std::uint64_t n, std::uint64_t l) {
  if (n == 0) throw InvalidArgument("ell_free_part needs n >= 1");
  require_prime(l);
  while (n % l == 0) n /= l;
  return n;
}

unsigned b_value(const PartMultiset& s, std::uint64_t l) {
  if (s.empty()) throw InvalidArgument("b_value needs a nonempty multiset");
  require_prime(l);
  BigInt sum = 0;
  for (const auto& e : s.entries()) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), l, ord_prime(e.part, l));
    sum += term * BigInt(std::to_string(e.multiplicity));
  }
  unsigned b = 0;
  BigInt power = 1;
  while (power < sum) {
    power *= static_cast<unsigned long>(l);
    ++b;
  }
  return b;
}

std::uint64_t m_value(const PartMultiset& s, std::uint64_t l) {
  if (s.empty()) throw InvalidArgument("m_value needs a nonempty multiset");
  require_prime(l);
  // lcm of the l-free parts equals the l-free part of the lcm.
  std::uint64_t m = 1;
  for (const auto& e : s.entries()) {
    const std::uint64_t f = ell_free_part(e.part, l);
    m = checked_mul(m / std::gcd(m, f), f);
  }
  return m;
}

PeriodReport kwong_period(const PartMultiset& s, std::uint64_t l, unsigned power) {
  if (power == 0) throw InvalidArgument("prime power exponent N must be >= 1");
  PeriodReport r;
  r.prime = l;
  r.power = power;
  r.parts = s;
  r.b = b_value(s, l);
  r.m = m_value(s, l);
  r.period = checked_mul(prime_power(l, power + r.b - 1), r.m);
  return r;
}

std::optional<std::uint64_t> empirical_period(const Series& a, std::uint64_t max_period, unsigned guard) {
  if (guard < 3) throw InvalidArgument("empirical_period guard must be >= 3");
  if (max_period == 0) throw InvalidArgument("max_period must be positive");
  const unsigned __int128 need = static_cast<unsigned __int128>(max_period) * guard;
  if (need > a.order()) {
    throw InsufficientOrder("series order " + std::to_string(a.order()) + " is below " + std::to_string(guard) +
                            " x max_period " + std::to_string(max_period));
  }
  const std::size_t len = a.order() + 1;
  auto same = [&](std::size_t i, std::size_t j) {
    if (a.ring().is_exact()) return a.exact_coeffs()[i] == a.exact_coeffs()[j];
    return a.residues()[i] == a.residues()[j];
  };
  // Prefix function: the minimal period of the whole window is len - border.
  std::vector<std::size_t> border(len, 0);
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && !same(i, k)) k = border[k - 1];
    if (same(i, k)) ++k;
    border[i] = k;
  }
  const std::uint64_t p = len - border[len - 1];
  if (p > max_period) return std::nullopt;
  return p;
}

PeriodReport cross_check_period(PeriodReport report, unsigned guard, std::uint64_t max_order) {
  const unsigned __int128 order = static_cast<unsigned __int128>(report.period) * guard;
  if (order > max_order) {
    throw BudgetExceeded("empirical period check needs order " + std::to_string(static_cast<std::uint64_t>(order)) +
                         " above the limit " + std::to_string(max_order));
  }
  const auto ring = CoefficientRing::modulo(prime_power(report.prime, report.power));
  const Series a = build_series(FamilyId::restricted(report.parts), static_cast<std::size_t>(order), ring);
  report.empirical_period = empirical_period(a, report.period, guard);
  report.empirical_checked = true;
  report.agreement = report.empirical_period == report.period;
  return report;
}

nlohmann::json to_json(const PeriodReport& r) {
  nlohmann::json j = {
      {"prime", r.prime}, {"power", r.power}, {"parts", r.parts.expanded()},
      {"b", r.b},         {"m", r.m},         {"period", r.period},
  };
  if (r.empirical_checked) {
    j["empirical_period"] = r.empirical_period ? nlohmann::json(*r.empirical_period) : nlohmann::json(nullptr);
    j["agreement"] = r.agreement;
  }
  return j;
}

}  // namespace qcong
