#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qcong {

using BigInt = mpz_class;

/// The ambient coefficient ring: Z, or Z/mZ with 2 <= m < 2^63.
/// Residues are always stored fully reduced into [0, m).
class CoefficientRing {
 public:
  static CoefficientRing exact() noexcept { return CoefficientRing{0}; }
  static CoefficientRing modulo(std::uint64_t m);

  bool is_exact() const noexcept { return modulus_ == 0; }
  /// Zero for the exact ring.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  explicit CoefficientRing(std::uint64_t m) noexcept : modulus_(m) {}
  std::uint64_t modulus_;
};

enum class Sign { Plus, Minus };

namespace detail {
struct SeriesAccess;
}

/// Truncated power series c_0 + c_1 q + ... + c_N q^N over a CoefficientRing.
///
/// Values are immutable once built; every operation returns a new series.
/// Binary operations demand the same ring and the same order N; there is no
/// implicit truncation, so a mismatch raises IncompatibleSeries.
class Series {
 public:
  static Series zero(CoefficientRing ring, std::size_t order);
  static Series one(CoefficientRing ring, std::size_t order);
  /// Order is coeffs.size() - 1; coefficients are reduced into the ring.
  static Series from_coeffs(CoefficientRing ring, std::span<const BigInt> coeffs);
  static Series from_coeffs(CoefficientRing ring, std::initializer_list<long long> coeffs);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return order_; }

  /// Canonical integer value of c_i (in [0, m) for modular rings).
  BigInt coeff(std::size_t i) const;
  /// c_i mod m. Valid for the exact ring, or for Mod(M) when m divides M.
  std::uint64_t residue(std::size_t i, std::uint64_t m) const;

  /// Direct views; each throws IncompatibleSeries when called on the other ring kind.
  std::span<const BigInt> exact_coeffs() const;
  std::span<const std::uint64_t> residues() const;

  std::vector<BigInt> to_vector() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  Series(CoefficientRing ring, std::size_t order);
  friend struct detail::SeriesAccess;

  CoefficientRing ring_;
  std::size_t order_;
  std::vector<BigInt> exact_;
  std::vector<std::uint64_t> mod_;
};

/// f(q^n) = (1 + q^n) / (1 - q^n) = 1 + 2 sum_{m>=1} q^{nm}.
Series f_series(std::uint64_t n, std::size_t order, CoefficientRing ring);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const BigInt& k);
/// Cauchy product truncated at the common order.
Series mul(const Series& a, const Series& b);
/// Repeated squaring; pow(a, 0) is one.
Series pow(const Series& a, std::uint64_t e);
/// Two-sided inverse. Throws NonUnitConstantTerm unless c_0 is a unit.
Series inverse_of_unit(const Series& a);

/// a * (1 + q^n)^e or a * (1 - q^n)^e; negative e divides. Runs |e| in-place
/// sparse passes, never materialising a dense factor.
Series mul_binomial_power(const Series& a, Sign sign, std::uint64_t n, std::int64_t e);

/// a * f(q^n)^e. Picks between binomial passes and a strided convolution with
/// the compressed factor, whichever touches fewer coefficients.
Series mul_f_power(const Series& a, std::uint64_t n, std::int64_t e);

/// Ring homomorphism into Z/mZ. The source must be exact or Mod(M) with m | M.
Series reduce_mod(const Series& a, std::uint64_t m);

/// a(q^d) truncated at `order`; needs a.order() >= order / d.
Series dilate(const Series& a, std::uint64_t d, std::size_t order);

/// Explicit truncation to a smaller or equal order.
Series truncate(const Series& a, std::size_t order);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

}  // namespace qcong
