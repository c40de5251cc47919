#include "qcong/series.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>
#include <utility>

#include "qcong/error.hpp"

namespace qcong {

namespace detail {

struct SeriesAccess {
  static Series make(CoefficientRing ring, std::size_t order) { return Series(ring, order); }
  static std::vector<BigInt>& exact(Series& s) { return s.exact_; }
  static std::vector<std::uint64_t>& mod(Series& s) { return s.mod_; }
  static const std::vector<BigInt>& exact(const Series& s) { return s.exact_; }
  static const std::vector<std::uint64_t>& mod(const Series& s) { return s.mod_; }
};

}  // namespace detail

namespace {

using detail::SeriesAccess;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct ExactOps {
  using value_type = BigInt;

  static std::vector<BigInt>& data(Series& s) { return SeriesAccess::exact(s); }
  static const std::vector<BigInt>& data(const Series& s) { return SeriesAccess::exact(s); }

  bool is_zero(const BigInt& x) const { return sgn(x) == 0; }
  void add_to(BigInt& x, const BigInt& y) const { x += y; }
  void sub_from(BigInt& x, const BigInt& y) const { x -= y; }
  void neg(BigInt& x) const { x = -x; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  void addmul(BigInt& acc, const BigInt& a, const BigInt& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  BigInt zero() const { return 0; }
  BigInt one() const { return 1; }
};

struct ModOps {
  using value_type = u64;

  u64 m;

  static std::vector<u64>& data(Series& s) { return SeriesAccess::mod(s); }
  static const std::vector<u64>& data(const Series& s) { return SeriesAccess::mod(s); }

  bool is_zero(u64 x) const { return x == 0; }
  void add_to(u64& x, u64 y) const {
    x += y;
    if (x >= m) x -= m;
  }
  void sub_from(u64& x, u64 y) const { x = x >= y ? x - y : x + (m - y); }
  void neg(u64& x) const { x = x == 0 ? 0 : m - x; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % m); }
  void addmul(u64& acc, u64 a, u64 b) const { add_to(acc, mul(a, b)); }
  u64 zero() const { return 0; }
  u64 one() const { return 1; }
};

// Invokes fn(ops) with the ring's arithmetic policy.
template <class Fn>
decltype(auto) with_ops(const CoefficientRing& ring, Fn&& fn) {
  if (ring.is_exact()) return fn(ExactOps{});
  return fn(ModOps{ring.modulus()});
}

void require_compatible(const Series& a, const Series& b, const char* what) {
  if (!(a.ring() == b.ring())) {
    throw IncompatibleSeries(std::string(what) + ": ring mismatch (" + a.ring().to_string() +
                             " vs " + b.ring().to_string() + ")");
  }
  if (a.order() != b.order()) {
    throw IncompatibleSeries(std::string(what) + ": order mismatch (" +
                             std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
  }
}

u64 reduce_big(const BigInt& v, u64 m) {
  // mpz_fdiv_ui yields the nonnegative remainder.
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

// Extended Euclid; returns the inverse of a mod m or 0 when gcd(a, m) != 1.
u64 mod_inverse(u64 a, u64 m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) return 0;
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

template <class Ops>
void multiply_into(const Ops& ops, const std::vector<typename Ops::value_type>& a,
                   const std::vector<typename Ops::value_type>& b,
                   std::vector<typename Ops::value_type>& out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (ops.is_zero(a[i])) continue;
    const auto& ai = a[i];
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!ops.is_zero(b[j])) ops.addmul(out[i + j], ai, b[j]);
    }
  }
}

// Small moduli admit a single reduction per output coefficient.
void multiply_small_mod(u64 m, const std::vector<u64>& a, const std::vector<u64>& b,
                        std::vector<u64>& out) {
  const std::size_t n = a.size();
  std::vector<u128> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const u64 ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) acc[i + j] += static_cast<u128>(ai * b[j]);
  }
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<u64>(acc[k] % m);
}

// In-place c *= (1 +/- q^n)^{+1} (descending sweep) or c /= (1 +/- q^n) (ascending sweep).
template <class Ops>
void binomial_pass(const Ops& ops, std::vector<typename Ops::value_type>& c, std::size_t n,
                   Sign sign, bool divide) {
  const std::size_t len = c.size();
  if (n >= len) return;
  // Multiplying by (1 + s q^n) adds s*c[j-n]; dividing subtracts s*c[j-n].
  const bool add = (sign == Sign::Plus) != divide;
  if (divide) {
    for (std::size_t j = n; j < len; ++j) {
      if (add) ops.add_to(c[j], c[j - n]);
      else ops.sub_from(c[j], c[j - n]);
    }
  } else {
    for (std::size_t j = len - 1; j >= n; --j) {
      if (add) ops.add_to(c[j], c[j - n]);
      else ops.sub_from(c[j], c[j - n]);
    }
  }
}

}  // namespace

CoefficientRing CoefficientRing::modulo(std::uint64_t m) {
  if (m < 2) throw InvalidArgument("modulus must be at least 2");
  if (m >= (std::uint64_t{1} << 63)) throw InvalidArgument("modulus must be below 2^63");
  return CoefficientRing{m};
}

std::string CoefficientRing::to_string() const {
  return is_exact() ? std::string("Exact") : "Mod(" + std::to_string(modulus_) + ")";
}

Series::Series(CoefficientRing ring, std::size_t order) : ring_(ring), order_(order) {
  if (ring_.is_exact()) exact_.assign(order + 1, BigInt(0));
  else mod_.assign(order + 1, 0);
}

Series Series::zero(CoefficientRing ring, std::size_t order) { return Series(ring, order); }

Series Series::one(CoefficientRing ring, std::size_t order) {
  Series s(ring, order);
  if (ring.is_exact()) s.exact_[0] = 1;
  else s.mod_[0] = 1;
  return s;
}

Series Series::from_coeffs(CoefficientRing ring, std::span<const BigInt> coeffs) {
  if (coeffs.empty()) throw InvalidArgument("a series needs at least one coefficient");
  Series s(ring, coeffs.size() - 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (ring.is_exact()) s.exact_[i] = coeffs[i];
    else s.mod_[i] = reduce_big(coeffs[i], ring.modulus());
  }
  return s;
}

Series Series::from_coeffs(CoefficientRing ring, std::initializer_list<long long> coeffs) {
  std::vector<BigInt> big;
  big.reserve(coeffs.size());
  for (long long c : coeffs) big.emplace_back(static_cast<long>(c));
  return from_coeffs(ring, big);
}

BigInt Series::coeff(std::size_t i) const {
  if (i > order_) {
    throw IndexOutOfRange("coefficient index " + std::to_string(i) + " exceeds order " +
                          std::to_string(order_));
  }
  if (ring_.is_exact()) return exact_[i];
  BigInt v;
  mpz_set_ui(v.get_mpz_t(), mod_[i]);
  return v;
}

std::uint64_t Series::residue(std::size_t i, std::uint64_t m) const {
  if (i > order_) {
    throw IndexOutOfRange("coefficient index " + std::to_string(i) + " exceeds order " +
                          std::to_string(order_));
  }
  if (m == 0) throw InvalidArgument("residue modulus must be positive");
  if (ring_.is_exact()) return reduce_big(exact_[i], m);
  if (ring_.modulus() % m != 0) {
    throw NonDivisibleModulus(std::to_string(m) + " does not divide " +
                              std::to_string(ring_.modulus()));
  }
  return mod_[i] % m;
}

std::span<const BigInt> Series::exact_coeffs() const {
  if (!ring_.is_exact()) throw IncompatibleSeries("exact_coeffs() on a modular series");
  return exact_;
}

std::span<const std::uint64_t> Series::residues() const {
  if (ring_.is_exact()) throw IncompatibleSeries("residues() on an exact series");
  return mod_;
}

std::vector<BigInt> Series::to_vector() const {
  std::vector<BigInt> out;
  out.reserve(order_ + 1);
  for (std::size_t i = 0; i <= order_; ++i) out.push_back(coeff(i));
  return out;
}

bool operator==(const Series& a, const Series& b) {
  return a.ring_ == b.ring_ && a.order_ == b.order_ && a.exact_ == b.exact_ && a.mod_ == b.mod_;
}

Series f_series(std::uint64_t n, std::size_t order, CoefficientRing ring) {
  if (n == 0) throw InvalidArgument("f_series needs n >= 1");
  Series s = Series::one(ring, order);
  return with_ops(ring, [&](auto ops) {
    auto& c = decltype(ops)::data(s);
    auto two = ops.one();
    ops.add_to(two, ops.one());
    for (std::size_t j = n; j <= order; j += n) c[j] = two;
    return s;
  });
}

Series add(const Series& a, const Series& b) {
  require_compatible(a, b, "add");
  Series out = a;
  with_ops(a.ring(), [&](auto ops) {
    auto& c = decltype(ops)::data(out);
    const auto& d = decltype(ops)::data(b);
    for (std::size_t i = 0; i < c.size(); ++i) ops.add_to(c[i], d[i]);
  });
  return out;
}

Series sub(const Series& a, const Series& b) {
  require_compatible(a, b, "sub");
  Series out = a;
  with_ops(a.ring(), [&](auto ops) {
    auto& c = decltype(ops)::data(out);
    const auto& d = decltype(ops)::data(b);
    for (std::size_t i = 0; i < c.size(); ++i) ops.sub_from(c[i], d[i]);
  });
  return out;
}

Series negate(const Series& a) {
  Series out = a;
  with_ops(a.ring(), [&](auto ops) {
    for (auto& x : decltype(ops)::data(out)) ops.neg(x);
  });
  return out;
}

Series scale(const Series& a, const BigInt& k) {
  Series out = a;
  if (a.ring().is_exact()) {
    for (auto& x : SeriesAccess::exact(out)) x *= k;
  } else {
    const ModOps ops{a.ring().modulus()};
    const u64 kk = reduce_big(k, ops.m);
    for (auto& x : SeriesAccess::mod(out)) x = ops.mul(x, kk);
  }
  return out;
}

Series mul(const Series& a, const Series& b) {
  require_compatible(a, b, "mul");
  Series out = Series::zero(a.ring(), a.order());
  if (!a.ring().is_exact() && a.ring().modulus() <= (u64{1} << 32)) {
    multiply_small_mod(a.ring().modulus(), SeriesAccess::mod(a), SeriesAccess::mod(b),
                       SeriesAccess::mod(out));
    return out;
  }
  with_ops(a.ring(), [&](auto ops) {
    multiply_into(ops, decltype(ops)::data(a), decltype(ops)::data(b), decltype(ops)::data(out));
  });
  return out;
}

Series pow(const Series& a, std::uint64_t e) {
  Series result = Series::one(a.ring(), a.order());
  if (e == 0) return result;
  Series base = a;
  bool first = true;
  while (true) {
    if (e & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return result;
}

Series inverse_of_unit(const Series& a) {
  Series out = Series::zero(a.ring(), a.order());
  with_ops(a.ring(), [&](auto ops) {
    using Ops = decltype(ops);
    using T = typename Ops::value_type;
    const auto& c = Ops::data(a);
    auto& b = Ops::data(out);
    T inv0;
    if constexpr (std::is_same_v<Ops, ExactOps>) {
      if (c[0] != 1 && c[0] != -1) {
        throw NonUnitConstantTerm("constant term " + c[0].get_str() + " is not a unit in Z");
      }
      inv0 = c[0];
    } else {
      inv0 = mod_inverse(c[0], ops.m);
      if (inv0 == 0) {
        throw NonUnitConstantTerm("constant term " + std::to_string(c[0]) +
                                  " is not a unit mod " + std::to_string(ops.m));
      }
    }
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k < c.size(); ++k) {
      if (!ops.is_zero(c[k])) support.push_back(k);
    }
    b[0] = inv0;
    T minus_inv0 = inv0;
    ops.neg(minus_inv0);
    for (std::size_t n = 1; n < c.size(); ++n) {
      T acc = ops.zero();
      for (std::size_t k : support) {
        if (k > n) break;
        ops.addmul(acc, c[k], b[n - k]);
      }
      b[n] = ops.mul(acc, minus_inv0);
    }
  });
  return out;
}

Series mul_binomial_power(const Series& a, Sign sign, std::uint64_t n, std::int64_t e) {
  if (n == 0) throw InvalidArgument("mul_binomial_power needs n >= 1");
  Series out = a;
  if (e == 0 || n > a.order()) return out;
  const bool divide = e < 0;
  const std::uint64_t passes = divide ? -static_cast<std::uint64_t>(e) : e;
  with_ops(a.ring(), [&](auto ops) {
    auto& c = decltype(ops)::data(out);
    for (std::uint64_t p = 0; p < passes; ++p) binomial_pass(ops, c, n, sign, divide);
  });
  return out;
}

Series mul_f_power(const Series& a, std::uint64_t n, std::int64_t e) {
  if (n == 0) throw InvalidArgument("mul_f_power needs n >= 1");
  if (e == 0 || n > a.order()) return a;
  const std::size_t len = a.order() + 1;
  const std::size_t terms = a.order() / n + 1;  // compressed factor length
  const std::uint64_t abs_e = e < 0 ? -static_cast<std::uint64_t>(e) : e;

  // In-place passes touch about 2|e|(len - n) cells; the strided convolution
  // touches about terms * len plus 2|e| * terms to build the factor.
  const double pass_cost = 2.0 * static_cast<double>(abs_e) * static_cast<double>(len - n);
  const double conv_cost = static_cast<double>(terms) * static_cast<double>(len) +
                           2.0 * static_cast<double>(abs_e) * static_cast<double>(terms);
  if (pass_cost <= conv_cost) {
    const Sign num = e > 0 ? Sign::Plus : Sign::Minus;
    const Sign den = e > 0 ? Sign::Minus : Sign::Plus;
    Series t = mul_binomial_power(a, num, n, static_cast<std::int64_t>(abs_e));
    return mul_binomial_power(t, den, n, -static_cast<std::int64_t>(abs_e));
  }

  Series out = Series::zero(a.ring(), a.order());
  with_ops(a.ring(), [&](auto ops) {
    using Ops = decltype(ops);
    std::vector<typename Ops::value_type> g(terms, ops.zero());
    g[0] = ops.one();
    const Sign num = e > 0 ? Sign::Plus : Sign::Minus;
    const Sign den = e > 0 ? Sign::Minus : Sign::Plus;
    for (std::uint64_t p = 0; p < abs_e; ++p) binomial_pass(ops, g, 1, num, false);
    for (std::uint64_t p = 0; p < abs_e; ++p) binomial_pass(ops, g, 1, den, true);
    const auto& src = Ops::data(a);
    auto& dst = Ops::data(out);
    for (std::size_t t = 0; t < terms; ++t) {
      if (ops.is_zero(g[t])) continue;
      const std::size_t shift = t * n;
      for (std::size_t j = shift; j < len; ++j) {
        if (!ops.is_zero(src[j - shift])) ops.addmul(dst[j], g[t], src[j - shift]);
      }
    }
  });
  return out;
}

Series reduce_mod(const Series& a, std::uint64_t m) {
  const CoefficientRing target = CoefficientRing::modulo(m);
  if (!a.ring().is_exact() && a.ring().modulus() % m != 0) {
    throw NonDivisibleModulus(std::to_string(m) + " does not divide " +
                              std::to_string(a.ring().modulus()));
  }
  Series out = detail::SeriesAccess::make(target, a.order());
  auto& dst = SeriesAccess::mod(out);
  if (a.ring().is_exact()) {
    const auto& src = SeriesAccess::exact(a);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = reduce_big(src[i], m);
  } else {
    const auto& src = SeriesAccess::mod(a);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] % m;
  }
  return out;
}

Series dilate(const Series& a, std::uint64_t d, std::size_t order) {
  if (d == 0) throw InvalidArgument("dilation factor must be positive");
  if (a.order() < order / d) {
    throw IncompatibleSeries("dilate: source order " + std::to_string(a.order()) +
                             " too small for target order " + std::to_string(order));
  }
  Series out = Series::zero(a.ring(), order);
  with_ops(a.ring(), [&](auto ops) {
    const auto& src = decltype(ops)::data(a);
    auto& dst = decltype(ops)::data(out);
    for (std::size_t j = 0; j * d <= order; ++j) dst[j * d] = src[j];
  });
  return out;
}

Series truncate(const Series& a, std::size_t order) {
  if (order > a.order()) {
    throw IncompatibleSeries("truncate: cannot extend order " + std::to_string(a.order()) +
                             " to " + std::to_string(order));
  }
  Series out = Series::zero(a.ring(), order);
  with_ops(a.ring(), [&](auto ops) {
    const auto& src = decltype(ops)::data(a);
    auto& dst = decltype(ops)::data(out);
    std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(order + 1), dst.begin());
  });
  return out;
}

}  // namespace qcong
