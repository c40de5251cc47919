#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "qcong/enumerate.hpp"
#include "qcong/error.hpp"
#include "qcong/genfun.hpp"

using namespace qcong;

namespace {

const auto Z = CoefficientRing::exact();

std::uint64_t series_coeff(const FamilyId& f, std::size_t n) {
  return build_series(f, n, Z).coeff(n).get_ui();
}

}  // namespace

TEST_CASE("small counts") {
  CHECK(count_partitions_multiset(5, PartMultiset::parse("1,2,5,8")) == 4);
  CHECK(count_partitions_multiset(4, PartMultiset::parse("1,2,2,3,3")) == 8);
  CHECK(count_partitions_multiset(0, PartMultiset::parse("7")) == 1);
  CHECK(count_overpartitions(3, false) == 8);
  CHECK(count_overpartitions(3, true) == 4);
  CHECK(count_overpartitions(0, false) == 1);
  CHECK(count_overpartitions(0, true) == 1);
  CHECK(count_plane_overpartitions(3, std::nullopt) == 16);
  CHECK(count_plane_overpartitions(2, std::nullopt) == 6);
  CHECK(count_plane_overpartitions(0, std::nullopt) == 1);
  CHECK(count_ncolor_overpartitions(3) == 16);
  CHECK(count_ncolor_partitions(3) == 6);
  CHECK(count_ncolor_overpartitions(0) == 1);
  CHECK(count_sum_of_squares(5, 2) == 2);
  CHECK(count_sum_of_squares(4, 1) == 1);
  CHECK(count_sum_of_squares(3, 2) == 0);
  CHECK(count_linear_reps(1, 3, 12) == 3);
  CHECK(count_linear_reps(5, 7, 213) == 6);
  CHECK(count_linear_reps(5, 7, 3) == 0);
  CHECK_THROWS_AS(count_linear_reps(0, 7, 3), InvalidArgument);
}

TEST_CASE("single-row plane overpartitions are overpartitions") {
  for (std::uint64_t n = 0; n <= 12; ++n) CHECK(count_plane_overpartitions(n, 1) == count_overpartitions(n, false));
}

TEST_CASE("enumeration agrees with the generating functions") {
  for (std::uint64_t n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(count_plane_overpartitions(n, std::nullopt) == series_coeff(FamilyId::plane(), n));
    CHECK(count_ncolor_overpartitions(n) == series_coeff(FamilyId::ncolor(), n));
    for (std::uint64_t k = 1; k <= 4; ++k) CHECK(count_plane_overpartitions(n, k) == series_coeff(FamilyId::k_rowed(k), n));
  }
  const auto pbar = build_series(FamilyId::overpartition(), 25, Z);
  const auto pobar = build_series(FamilyId::odd_overpartition(), 25, Z);
  const auto s = PartMultiset::parse("1,2,2,3,5,5");
  const auto ps = build_series(FamilyId::restricted(s), 25, Z);
  for (std::uint64_t n = 0; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(count_overpartitions(n, false) == pbar.coeff(n));
    CHECK(count_overpartitions(n, true) == pobar.coeff(n));
    CHECK(count_partitions_multiset(n, s) == ps.coeff(n));
  }
}

TEST_CASE("property: row-bounded counts grow with k and stabilise at k = n") {
  for (std::uint64_t n = 1; n <= 9; ++n) {
    std::uint64_t prev = 0;
    for (std::uint64_t k = 1; k <= n + 2; ++k) {
      const auto c = count_plane_overpartitions(n, k);
      CHECK(c >= prev);
      prev = c;
      if (k >= n) CHECK(c == count_plane_overpartitions(n, std::nullopt));
    }
  }
}

TEST_CASE("property: n-color and plane models have the same counts") {
  for (std::uint64_t n = 0; n <= 8; ++n) CHECK(count_ncolor_overpartitions(n) == count_plane_overpartitions(n, std::nullopt));
}

TEST_CASE("property: a b c has c - 1 positive representations") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 20) {
    const std::uint64_t a = 1 + rng() % 30, b = 1 + rng() % 30;
    if (std::gcd(a, b) != 1) continue;
    ++done;
    for (std::uint64_t c = 1; c <= 10; ++c) CHECK(count_linear_reps(a, b, a * b * c) == c - 1);
  }
}

TEST_CASE("property: positive representations equal two-part restricted partitions for coprime data") {
  std::mt19937_64 rng(57);
  int done = 0;
  while (done < 40) {
    const std::uint64_t a = 2 + rng() % 20, b = 2 + rng() % 20, c = 2 + rng() % 400;
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
    ++done;
    CHECK(count_linear_reps(a, b, c) == count_partitions_multiset(c, PartMultiset::from_parts({a, b})));
  }
}

TEST_CASE("plane overpartition validation and rendering") {
  const auto p = PlaneOverpartition::parse("5 4 4~ 3 1~/3 2 1/2 2~ 1~/1 1/1~");
  CHECK(p.is_valid());
  CHECK(p.weight() == 31);
  CHECK(p.render() == "5 4 4~ 3 1~\n3 2 1\n2 2~ 1~\n1 1\n1~");
  CHECK(PlaneOverpartition::parse(p.render()) == p);

  CHECK_FALSE(PlaneOverpartition::parse("1~ 1").is_valid());  // row rule
  CHECK(PlaneOverpartition::parse("1 1~").is_valid());
  CHECK_FALSE(PlaneOverpartition::parse("1/1").is_valid());  // column rule
  CHECK(PlaneOverpartition::parse("1/1~").is_valid());
  CHECK(PlaneOverpartition::parse("1~/1~").is_valid());
  CHECK_FALSE(PlaneOverpartition::parse("1 2").is_valid());  // rows must decrease
  CHECK_FALSE(PlaneOverpartition::parse("1/2").is_valid());  // columns must decrease

  CHECK_THROWS_AS(PlaneOverpartition({{Cell{1, false}}, {Cell{1, false}, Cell{1, false}}}), InvalidArgument);
  CHECK_THROWS_AS(PlaneOverpartition(std::vector<std::vector<Cell>>{{}}), InvalidArgument);
  CHECK_THROWS_AS(PlaneOverpartition::parse("1 x"), Error);
}

TEST_CASE("visited diagrams are valid, distinct and of the right weight") {
  for (std::uint64_t n = 0; n <= 6; ++n) {
    std::set<std::string> seen;
    std::uint64_t visits = 0;
    for_each_plane_overpartition(n, std::nullopt, [&](const PlaneOverpartition& p) {
      CHECK(p.is_valid());
      CHECK(p.weight() == n);
      seen.insert(p.render());
      ++visits;
    });
    CHECK(visits == seen.size());
    CHECK(visits == count_plane_overpartitions(n, std::nullopt));
  }
  std::uint64_t ov = 0;
  for_each_overpartition(5, [&](const Overpartition& o) {
    CHECK(o.is_valid());
    CHECK(o.weight() == 5);
    ++ov;
  });
  CHECK(ov == count_overpartitions(5, false));
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(count_plane_overpartitions(10, std::nullopt, 1000), BudgetExceeded);
  CHECK_NOTHROW(count_plane_overpartitions(3, std::nullopt, 1000));
}
