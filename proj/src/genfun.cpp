#include "qcong/genfun.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "qcong/error.hpp"

namespace qcong {

namespace {

std::uint64_t parse_positive(const std::string& text, const std::string& what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("invalid " + what + ": '" + text + "'");
  }
  std::uint64_t v = 0;
  try {
    v = std::stoull(text);
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + ": '" + text + "'");
  }
  if (v == 0) throw ParseError(what + " must be positive");
  return v;
}

// phi(+-q^d): 1 + 2 sum_{m>=1} (+-1)^m q^{d m^2}.
Series phi_dilated(Sign sign, std::uint64_t d, std::size_t order, CoefficientRing ring) {
  std::vector<BigInt> c(order + 1, BigInt(0));
  c[0] = 1;
  for (std::uint64_t m = 1; d * m * m <= order; ++m) {
    c[d * m * m] = (sign == Sign::Minus && (m % 2 == 1)) ? -2 : 2;
  }
  return Series::from_coeffs(ring, c);
}

void require_two_power_exponent(unsigned K) {
  if (K < 2) throw InvalidArgument("2-adic precision K must be at least 2");
  if (K > 62) throw InvalidArgument("2-adic precision K must be at most 62");
}

}  // namespace

PartMultiset PartMultiset::from_parts(const std::vector<std::uint64_t>& parts) {
  std::vector<Entry> entries;
  entries.reserve(parts.size());
  for (std::uint64_t p : parts) entries.push_back({p, 1});
  return from_entries(std::move(entries));
}

PartMultiset PartMultiset::from_entries(std::vector<Entry> entries) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& e : entries) {
    if (e.part == 0) throw InvalidArgument("multiset parts must be positive");
    if (e.multiplicity == 0) throw InvalidArgument("multiplicities must be positive");
    merged[e.part] += e.multiplicity;
  }
  if (merged.empty()) throw InvalidArgument("multiset must contain at least one part");
  PartMultiset s;
  for (const auto& [part, mult] : merged) s.entries_.push_back({part, mult});
  return s;
}

PartMultiset PartMultiset::parse(const std::string& text) {
  std::vector<std::uint64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_positive(item, "part"));
  if (parts.empty()) throw ParseError("empty part list");
  return from_parts(parts);
}

std::uint64_t PartMultiset::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<std::uint64_t> PartMultiset::expanded() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.part);
  return out;
}

std::string PartMultiset::to_string() const {
  std::string out;
  for (std::uint64_t p : expanded()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

FamilyId FamilyId::k_rowed(std::uint64_t k) {
  if (k == 0) throw InvalidArgument("k-rowed plane overpartitions need k >= 1");
  return {FamilyKind::KRowedPlaneOverpartition, k, {}};
}

FamilyId FamilyId::restricted(PartMultiset s) {
  if (s.empty()) throw InvalidArgument("restricted partitions need a nonempty multiset");
  return {FamilyKind::RestrictedPartition, 0, std::move(s)};
}

std::string FamilyId::spec() const {
  switch (kind) {
    case FamilyKind::Overpartition: return "over";
    case FamilyKind::OddOverpartition: return "oddover";
    case FamilyKind::PlaneOverpartition: return "plane";
    case FamilyKind::KRowedPlaneOverpartition: return "plk:" + std::to_string(rows);
    case FamilyKind::RestrictedPartition: return "restricted:" + parts.to_string();
    case FamilyKind::NColorOverpartition: return "ncolor";
  }
  return "?";
}

FamilyId FamilyId::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  auto no_arg = [&](FamilyId id) {
    if (has_arg) throw ParseError("family '" + head + "' takes no parameter");
    return id;
  };
  if (head == "over" || head == "overpartition") return no_arg(overpartition());
  if (head == "oddover") return no_arg(odd_overpartition());
  if (head == "plane") return no_arg(plane());
  if (head == "ncolor") return no_arg(ncolor());
  if (head == "plk") {
    if (!has_arg) throw ParseError("family 'plk' needs a row bound, e.g. plk:4");
    return k_rowed(parse_positive(arg, "row bound"));
  }
  if (head == "restricted") {
    if (!has_arg) throw ParseError("family 'restricted' needs parts, e.g. restricted:5,7");
    return restricted(PartMultiset::parse(arg));
  }
  throw ParseError("unknown family '" + text + "'");
}

std::string FamilyId::short_name() const {
  switch (kind) {
    case FamilyKind::Overpartition: return "pbar";
    case FamilyKind::OddOverpartition: return "pobar";
    case FamilyKind::PlaneOverpartition: return "pl";
    case FamilyKind::KRowedPlaneOverpartition: return "pl" + std::to_string(rows);
    case FamilyKind::RestrictedPartition: return "p[" + parts.to_string() + "]";
    case FamilyKind::NColorOverpartition: return "ncolor";
  }
  return "?";
}

Series build_series(const FamilyId& family, std::size_t order, CoefficientRing ring) {
  Series s = Series::one(ring, order);
  switch (family.kind) {
    case FamilyKind::Overpartition:
      for (std::uint64_t n = 1; n <= order; ++n) s = mul_f_power(s, n, 1);
      return s;
    case FamilyKind::OddOverpartition:
      for (std::uint64_t n = 1; n <= order; n += 2) s = mul_f_power(s, n, 1);
      return s;
    case FamilyKind::NColorOverpartition:
    case FamilyKind::PlaneOverpartition:
      for (std::uint64_t n = 1; n <= order; ++n) s = mul_f_power(s, n, static_cast<std::int64_t>(n));
      return s;
    case FamilyKind::KRowedPlaneOverpartition: {
      if (family.rows == 0) throw InvalidArgument("k-rowed plane overpartitions need k >= 1");
      for (std::uint64_t n = 1; n <= order; ++n) {
        s = mul_f_power(s, n, static_cast<std::int64_t>(std::min(family.rows, n)));
      }
      return s;
    }
    case FamilyKind::RestrictedPartition:
      if (family.parts.empty()) throw InvalidArgument("restricted partitions need a nonempty multiset");
      for (const auto& e : family.parts.entries()) {
        s = mul_binomial_power(s, Sign::Minus, e.part, -static_cast<std::int64_t>(e.multiplicity));
      }
      return s;
  }
  throw InvalidArgument("unknown family kind");
}

Series phi_series(Sign sign, std::size_t order, CoefficientRing ring) {
  return phi_dilated(sign, 1, order, ring);
}

Series sum_of_squares_series(std::uint64_t k, std::size_t order, CoefficientRing ring) {
  if (k == 0) throw InvalidArgument("sum_of_squares_series needs k >= 1");
  std::vector<BigInt> t(order + 1, BigInt(0));
  for (std::uint64_t m = 1; m * m <= order; ++m) t[m * m] = 1;
  return pow(Series::from_coeffs(ring, t), k);
}

Series two_adic_overpartition(std::size_t order, unsigned K) {
  require_two_power_exponent(K);
  const auto ring = CoefficientRing::modulo(std::uint64_t{1} << K);
  Series total = Series::one(ring, order);
  for (unsigned j = 1; j < K; ++j) {
    const Series cj = sum_of_squares_series(j, order, ring);
    std::vector<BigInt> term(order + 1, BigInt(0));
    const BigInt weight = BigInt(1) << j;
    for (std::size_t n = 1; n <= order; ++n) {
      const bool negative = ((n + j) % 2) == 1;
      term[n] = weight * cj.coeff(n);
      if (negative) term[n] = -term[n];
    }
    total = add(total, Series::from_coeffs(ring, term));
  }
  return total;
}

Series phi_product_approx(unsigned K, std::size_t order) {
  require_two_power_exponent(K);
  const auto ring = CoefficientRing::modulo(std::uint64_t{1} << K);
  Series s = Series::one(ring, order);
  for (unsigned j = 0; j + 2 <= K; ++j) {
    const std::uint64_t d = std::uint64_t{1} << j;
    s = mul(s, pow(phi_dilated(Sign::Plus, d, order, ring), d));
  }
  return s;
}

Series odd_phi_product_approx(unsigned K, std::size_t order) {
  require_two_power_exponent(K);
  const auto ring = CoefficientRing::modulo(std::uint64_t{1} << K);
  Series s = phi_dilated(Sign::Plus, 1, order, ring);
  for (unsigned j = 0; j + 2 <= K; ++j) {
    const std::uint64_t e = std::uint64_t{1} << j;
    s = mul(s, pow(phi_dilated(Sign::Plus, 2 * e, order, ring), e));
  }
  return s;
}

Series tail_product_series(std::uint64_t n, std::size_t order, CoefficientRing ring) {
  Series s = Series::one(ring, order);
  for (std::uint64_t i = n + 1; i <= order; ++i) s = mul_f_power(s, i, 1);
  return s;
}

std::optional<std::size_t> first_mismatch(const Series& a, const Series& b) {
  if (!(a.ring() == b.ring()) || a.order() != b.order()) {
    throw IncompatibleSeries("first_mismatch: series are not comparable");
  }
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeff(i) != b.coeff(i)) return i;
  }
  return std::nullopt;
}

std::vector<IdentityReport> check_phi_factorizations(std::size_t order) {
  const auto ring = CoefficientRing::exact();
  const Series phi = phi_series(Sign::Plus, order, ring);
  const Series p_q2 = dilate(build_series(FamilyId::overpartition(), order / 2, ring), 2, order);

  const Series over = build_series(FamilyId::overpartition(), order, ring);
  const Series odd = build_series(FamilyId::odd_overpartition(), order, ring);

  std::vector<IdentityReport> out;
  out.push_back({"P(q) = phi(q) P(q^2)^2", order, first_mismatch(over, mul(phi, mul(p_q2, p_q2)))});
  out.push_back({"Po(q) = phi(q) P(q^2)", order, first_mismatch(odd, mul(phi, p_q2))});
  return out;
}

std::vector<IdentityReport> check_jacobi_specializations(std::size_t order) {
  const auto ring = CoefficientRing::exact();
  std::vector<IdentityReport> out;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    Series lhs = Series::one(ring, order);
    for (std::uint64_t n = 1; 2 * n - 1 <= order; ++n) {
      lhs = mul_binomial_power(lhs, Sign::Minus, 2 * n, 1);
      lhs = mul_binomial_power(lhs, sign, 2 * n - 1, 2);
    }
    const Series rhs = phi_series(sign, order, ring);
    out.push_back({sign == Sign::Plus ? "prod (1-q^2n)(1+q^(2n-1))^2 = phi(q)"
                                      : "prod (1-q^2n)(1-q^(2n-1))^2 = phi(-q)",
                   order, first_mismatch(lhs, rhs)});
  }
  return out;
}

}  // namespace qcong
