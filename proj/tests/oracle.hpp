#pragma once

// Independent reference implementations used only by the tests. Everything
// here works on plain BigInt vectors with schoolbook loops.

#include <cstdint>
#include <random>
#include <vector>

#include "qcong/series.hpp"

namespace oracle {

using qcong::BigInt;
using Poly = std::vector<BigInt>;

inline Poly naive_mul(const Poly& a, const Poly& b) {
  Poly c(a.size(), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly naive_pow(const Poly& a, std::uint64_t e) {
  Poly r(a.size(), BigInt(0));
  r[0] = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = naive_mul(r, a);
  return r;
}

/// Inverse by the defining recurrence; a[0] must be +-1.
inline Poly naive_inverse(const Poly& a) {
  Poly b(a.size(), BigInt(0));
  b[0] = a[0];  // 1/a0 = a0 for a0 = +-1
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigInt s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * b[n - k];
    b[n] = -s * a[0];
  }
  return b;
}

/// (1 + sign q^n) as a dense polynomial truncated to `order`.
inline Poly binomial(int sign, std::uint64_t n, std::size_t order) {
  Poly p(order + 1, BigInt(0));
  p[0] = 1;
  if (n <= order) p[n] += sign;
  return p;
}

inline BigInt mod_floor(const BigInt& v, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r;
}

inline Poly reduce(const Poly& a, std::uint64_t m) {
  Poly r;
  for (const auto& v : a) r.push_back(mod_floor(v, m));
  return r;
}

/// Exact coefficients of prod_{n=1}^{order} f(q^n)^{e(n)} by expanding each
/// factor into a dense polynomial and multiplying naively.
template <typename Exponent>
Poly naive_f_product(std::size_t order, Exponent e) {
  Poly acc(order + 1, BigInt(0));
  acc[0] = 1;
  for (std::uint64_t n = 1; n <= order; ++n) {
    Poly f(order + 1, BigInt(0));
    f[0] = 1;
    for (std::uint64_t j = n; j <= order; j += n) f[j] = 2;
    acc = naive_mul(acc, naive_pow(f, e(n)));
  }
  return acc;
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t order, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  Poly p;
  for (std::size_t i = 0; i <= order; ++i) p.push_back(BigInt(d(rng)));
  return p;
}

inline qcong::Series series(const Poly& p, qcong::CoefficientRing ring = qcong::CoefficientRing::exact()) {
  return qcong::Series::from_coeffs(ring, p);
}

}  // namespace oracle
