#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// Finite multiset of positive parts. Repeated parts are distinct copies, so
/// {1,2,2} admits the partitions 2_1 and 2_2 separately.
class PartMultiset {
 public:
  struct Entry {
    std::uint64_t part;
    std::uint64_t multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  PartMultiset() = default;
  /// Each listed part is one copy; equal parts merge.
  static PartMultiset from_parts(const std::vector<std::uint64_t>& parts);
  static PartMultiset from_entries(std::vector<Entry> entries);
  /// Comma-separated parts, e.g. "1,2,2,3,3".
  static PartMultiset parse(const std::string& text);

  /// Canonical form: sorted by part, equal parts merged.
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint64_t total_multiplicity() const;
  /// Parts expanded with repetition, ascending.
  std::vector<std::uint64_t> expanded() const;
  std::string to_string() const;
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const PartMultiset&, const PartMultiset&) = default;

 private:
  std::vector<Entry> entries_;
};

enum class FamilyKind {
  Overpartition,
  OddOverpartition,
  PlaneOverpartition,
  KRowedPlaneOverpartition,
  RestrictedPartition,
  NColorOverpartition,
};

/// Which generating function a series or claim refers to.
struct FamilyId {
  FamilyKind kind = FamilyKind::Overpartition;
  std::uint64_t rows = 0;  // KRowedPlaneOverpartition only
  PartMultiset parts;      // RestrictedPartition only

  static FamilyId overpartition() { return {FamilyKind::Overpartition, 0, {}}; }
  static FamilyId odd_overpartition() { return {FamilyKind::OddOverpartition, 0, {}}; }
  static FamilyId plane() { return {FamilyKind::PlaneOverpartition, 0, {}}; }
  static FamilyId k_rowed(std::uint64_t k);
  static FamilyId restricted(PartMultiset s);
  static FamilyId ncolor() { return {FamilyKind::NColorOverpartition, 0, {}}; }

  /// Stable textual form used in JSON and the CLI: over, oddover, plane,
  /// plk:K, restricted:a,b,c, ncolor.
  std::string spec() const;
  static FamilyId parse(const std::string& text);
  /// Compact name used inside claim labels (pbar, pobar, pl, pl4, ...).
  std::string short_name() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Truncated generating function of the family. Products run over factor
/// indices n <= order; later factors are 1 + O(q^{order+1}).
Series build_series(const FamilyId& family, std::size_t order, CoefficientRing ring);

/// phi(q) for Sign::Plus, phi(-q) for Sign::Minus.
Series phi_series(Sign sign, std::size_t order, CoefficientRing ring);

/// Coefficients c_k(n): ordered k-tuples of positive integers with sum of squares n.
Series sum_of_squares_series(std::uint64_t k, std::size_t order, CoefficientRing ring);

/// 1 + sum_{j=1}^{K-1} 2^j sum_n (-1)^{n+j} c_j(n) q^n over Mod(2^K).
Series two_adic_overpartition(std::size_t order, unsigned K);

/// prod_{j=0}^{K-2} phi(q^{2^j})^{2^j} over Mod(2^K).
Series phi_product_approx(unsigned K, std::size_t order);

/// phi(q) prod_{j=0}^{K-2} phi(q^{2^{j+1}})^{2^j} over Mod(2^K), the odd-parts analogue.
Series odd_phi_product_approx(unsigned K, std::size_t order);

/// G_n(q) = prod_{i>n} f(q^i).
Series tail_product_series(std::uint64_t n, std::size_t order, CoefficientRing ring);

struct IdentityReport {
  std::string name;
  std::size_t order = 0;
  std::optional<std::size_t> first_mismatch;
  bool passed() const noexcept { return !first_mismatch; }
};

/// Index of the first differing coefficient, if any.
std::optional<std::size_t> first_mismatch(const Series& a, const Series& b);

/// P(q) = phi(q) P(q^2)^2 and P_o(q) = phi(q) P(q^2), checked exactly.
std::vector<IdentityReport> check_phi_factorizations(std::size_t order);

/// Triple-product specialisations at z = 1 and z = -1, checked exactly.
std::vector<IdentityReport> check_jacobi_specializations(std::size_t order);

}  // namespace qcong
