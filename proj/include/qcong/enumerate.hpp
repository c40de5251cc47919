#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcong/genfun.hpp"

// Brute-force combinatorial oracles. Each counts by explicit enumeration so it
// can stand as ground truth for the series code at small n.
namespace qcong {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 200'000'000;

struct Cell {
  std::uint64_t value = 0;
  bool overlined = false;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Left-justified array of cells with weakly decreasing row lengths. The
/// constructor enforces the shape only; is_valid() checks the ordering and
/// overline rules.
class PlaneOverpartition {
 public:
  explicit PlaneOverpartition(std::vector<std::vector<Cell>> rows);
  /// Rows separated by '/' or newlines, cells by spaces, '~' marks an overline:
  /// "5 4 4~ 3 1~/3 2 1".
  static PlaneOverpartition parse(const std::string& text);

  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
  std::uint64_t weight() const;
  bool is_valid() const;
  /// One row per line, overlined values suffixed with '~'.
  std::string render() const;

  friend bool operator==(const PlaneOverpartition&, const PlaneOverpartition&) = default;

 private:
  std::vector<std::vector<Cell>> rows_;
};

/// Parts weakly decreasing; at most the first occurrence of each value overlined.
struct Overpartition {
  std::vector<std::uint64_t> parts;
  std::vector<bool> overlined;
  bool is_valid() const;
  std::uint64_t weight() const;
  std::string render() const;
};

/// Partitions of n into parts from S; equal entries of S count as distinct kinds.
std::uint64_t count_partitions_multiset(std::uint64_t n, const PartMultiset& s);

/// Sum over n = |D| + |U| of #distinct-parts(D) * #partitions(U).
std::uint64_t count_overpartitions(std::uint64_t n, bool odd_parts_only);

/// Calls `visit` for every overpartition of n, in a fixed order.
void for_each_overpartition(std::uint64_t n, const std::function<void(const Overpartition&)>& visit);

/// Plane partitions with at most max_rows rows (unbounded if nullopt), then every
/// overline assignment allowed by the row and column rules. `budget` caps cell visits.
std::uint64_t count_plane_overpartitions(std::uint64_t n, std::optional<std::uint64_t> max_rows,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

void for_each_plane_overpartition(std::uint64_t n, std::optional<std::uint64_t> max_rows,
                                  const std::function<void(const PlaneOverpartition&)>& visit,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Partitions into colored parts j_i with 1 <= i <= j.
std::uint64_t count_ncolor_partitions(std::uint64_t n);
/// As above, the last occurrence of each colored part optionally overlined.
std::uint64_t count_ncolor_overpartitions(std::uint64_t n);

/// Ordered k-tuples of positive integers whose squares sum to n.
std::uint64_t count_sum_of_squares(std::uint64_t n, std::uint64_t k);

/// #{(x, y) positive : a x + b y = c}.
std::uint64_t count_linear_reps(std::uint64_t a, std::uint64_t b, std::uint64_t c);

}  // namespace qcong
