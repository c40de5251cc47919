#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qcong/congruence.hpp"
#include "qcong/enumerate.hpp"
#include "qcong/error.hpp"
#include "qcong/genfun.hpp"

using namespace qcong;

namespace {

const auto Z = CoefficientRing::exact();

std::vector<long long> values(const Series& s) {
  std::vector<long long> out;
  for (const auto& c : s.to_vector()) out.push_back(c.get_si());
  return out;
}

using V = std::vector<long long>;

}  // namespace

TEST_CASE("known coefficient lists") {
  CHECK(values(build_series(FamilyId::overpartition(), 10, Z)) == V{1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232});
  CHECK(values(build_series(FamilyId::plane(), 10, Z)) == V{1, 2, 6, 16, 38, 88, 196, 420, 878, 1794, 3584});
  CHECK(values(build_series(FamilyId::k_rowed(2), 7, Z)) == V{1, 2, 6, 14, 30, 62, 122, 230});
  CHECK(values(build_series(FamilyId::odd_overpartition(), 10, Z)) == V{1, 2, 2, 4, 6, 8, 12, 16, 22, 30, 40});
  CHECK(values(build_series(FamilyId::k_rowed(1), 10, Z)) ==
        values(build_series(FamilyId::overpartition(), 10, Z)));
  CHECK(values(build_series(FamilyId::restricted(PartMultiset::from_parts({1})), 4, Z)) == V{1, 1, 1, 1, 1});
  CHECK(values(build_series(FamilyId::restricted(PartMultiset::parse("1,2,2,3,3")), 4, Z)) == V{1, 1, 3, 5, 8});
  CHECK(values(build_series(FamilyId::overpartition(), 0, Z)) == V{1});
}

TEST_CASE("phi and sums of squares") {
  CHECK(values(phi_series(Sign::Plus, 9, Z)) == V{1, 2, 0, 0, 2, 0, 0, 0, 0, 2});
  CHECK(values(phi_series(Sign::Minus, 9, Z)) == V{1, -2, 0, 0, 2, 0, 0, 0, 0, -2});
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const auto s = sum_of_squares_series(k, 60, Z);
    for (std::size_t n = 1; n <= 60; ++n) CHECK(s.coeff(n) == count_sum_of_squares(n, k));
  }
  CHECK(count_sum_of_squares(5, 2) == 2);
}

TEST_CASE("2-adic expansion of the overpartition series") {
  const std::size_t N = 300;
  CHECK(two_adic_overpartition(N, 2) == reduce_mod(phi_series(Sign::Plus, N, Z), 4));
  const auto m8 = CoefficientRing::modulo(8);
  const auto phi1 = phi_series(Sign::Plus, N, m8);
  const auto phi2 = dilate(phi_series(Sign::Plus, N / 2, m8), 2, N);
  CHECK(two_adic_overpartition(N, 3) == mul(phi1, mul(phi2, phi2)));

  const std::size_t M = 500;
  const auto pbar = build_series(FamilyId::overpartition(), M, Z);
  const auto pobar = build_series(FamilyId::odd_overpartition(), M, Z);
  for (unsigned K = 2; K <= 6; ++K) {
    CAPTURE(K);
    const auto expect = reduce_mod(pbar, std::uint64_t{1} << K);
    CHECK(two_adic_overpartition(M, K) == expect);
    CHECK(phi_product_approx(K, M) == expect);
    CHECK(odd_phi_product_approx(K, M) == reduce_mod(pobar, std::uint64_t{1} << K));
  }
  CHECK_THROWS_AS(two_adic_overpartition(10, 1), InvalidArgument);
  CHECK_THROWS_AS(phi_product_approx(63, 10), InvalidArgument);
}

TEST_CASE("tail products") {
  const std::size_t N = 100;
  CHECK(tail_product_series(0, N, Z) == build_series(FamilyId::overpartition(), N, Z));
  // G_1 = P(q) / f(q).
  CHECK(tail_product_series(1, N, Z) == mul_f_power(build_series(FamilyId::overpartition(), N, Z), 1, -1));
  Series acc = Series::one(Z, N);
  for (std::uint64_t n = 0; n <= N; ++n) acc = mul(acc, tail_product_series(n, N, Z));
  CHECK(acc == build_series(FamilyId::plane(), N, Z));
  CHECK(tail_product_series(N, N, Z) == Series::one(Z, N));
}

TEST_CASE("identity checks") {
  for (std::size_t order : {0u, 100u, 200u}) {
    for (const auto& r : check_phi_factorizations(order)) CHECK_MESSAGE(r.passed(), r.name);
    for (const auto& r : check_jacobi_specializations(order)) CHECK_MESSAGE(r.passed(), r.name);
  }
  CHECK(check_phi_factorizations(10).size() == 2);
  CHECK_FALSE(first_mismatch(Series::one(Z, 3), Series::one(Z, 3)));
  CHECK(first_mismatch(Series::one(Z, 3), Series::from_coeffs(Z, {1, 0, 5, 0})) == std::optional<std::size_t>(2));
}

TEST_CASE("property: structural invariants of the families") {
  const std::size_t N = 60;
  const auto plane = build_series(FamilyId::plane(), N, Z);
  for (std::uint64_t k = 1; k <= 12; ++k) {
    const auto pk = build_series(FamilyId::k_rowed(k), N, Z);
    for (std::size_t n = 0; n <= std::min<std::size_t>(k, N); ++n) CHECK(pk.coeff(n) == plane.coeff(n));
    if (k > 1) {
      const auto prev = build_series(FamilyId::k_rowed(k - 1), N, Z);
      for (std::size_t n = 0; n <= N; ++n) CHECK(prev.coeff(n) <= pk.coeff(n));
    }
  }
  for (const auto& fam : {FamilyId::overpartition(), FamilyId::odd_overpartition(), FamilyId::plane(),
                          FamilyId::k_rowed(3), FamilyId::ncolor()}) {
    const auto s = build_series(fam, N, Z);
    CHECK(s.coeff(0) == 1);
    for (std::size_t n = 1; n <= N; ++n) CHECK(s.coeff(n) % 2 == 0);
  }
  CHECK(build_series(FamilyId::ncolor(), N, Z) == plane);
}

TEST_CASE("fast route agrees with the product route") {
  for (const auto& fam : {FamilyId::overpartition(), FamilyId::odd_overpartition(), FamilyId::plane(),
                          FamilyId::k_rowed(4)}) {
    CHECK(build_series_fast(fam, 301, Z) == build_series(fam, 301, Z));
    for (std::uint64_t m : {4u, 8u, 12u, 64u}) {
      const auto ring = CoefficientRing::modulo(m);
      CHECK(build_series_fast(fam, 300, ring) == build_series(fam, 300, ring));
    }
  }
}

TEST_CASE("product route matches a dense naive product") {
  const std::size_t N = 30;
  CHECK(build_series(FamilyId::plane(), N, Z) == oracle::series(oracle::naive_f_product(N, [](std::uint64_t n) { return n; })));
  CHECK(build_series(FamilyId::k_rowed(3), N, Z) ==
        oracle::series(oracle::naive_f_product(N, [](std::uint64_t n) { return std::min<std::uint64_t>(n, 3); })));
}

TEST_CASE("FamilyId text forms") {
  const std::vector<FamilyId> fams = {FamilyId::overpartition(), FamilyId::odd_overpartition(), FamilyId::plane(),
                                      FamilyId::k_rowed(7), FamilyId::restricted(PartMultiset::parse("5,7")),
                                      FamilyId::ncolor()};
  for (const auto& f : fams) CHECK(FamilyId::parse(f.spec()) == f);
  CHECK(FamilyId::plane().spec() == "plane");
  CHECK(FamilyId::k_rowed(7).spec() == "plk:7");
  CHECK(FamilyId::k_rowed(7).short_name() == "pl7");
  CHECK(FamilyId::overpartition().short_name() == "pbar");
  CHECK(FamilyId::odd_overpartition().short_name() == "pobar");
  CHECK(FamilyId::parse("overpartition") == FamilyId::overpartition());
  CHECK(FamilyId::parse("restricted:7,5").parts == PartMultiset::from_parts({5, 7}));
  for (const char* bad : {"", "plk:0", "plk:x", "restricted:", "restricted:0", "nope", "plk:"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(FamilyId::parse(bad), Error);
  }
}

TEST_CASE("PartMultiset canonical form") {
  const auto s = PartMultiset::parse("3,1,2,3,2");
  CHECK(s.to_string() == "1,2,2,3,3");
  CHECK(s.total_multiplicity() == 5);
  CHECK(s.expanded() == std::vector<std::uint64_t>{1, 2, 2, 3, 3});
  CHECK(s.entries().size() == 3);
  CHECK(s == PartMultiset::from_entries({{3, 2}, {2, 2}, {1, 1}}));
  CHECK(PartMultiset().empty());
  CHECK_THROWS_AS(PartMultiset::parse("1,,2"), Error);
  CHECK_THROWS_AS(PartMultiset::parse("0"), Error);
}

TEST_CASE("property: restricted series matches brute-force counts") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint64_t> parts;
    const int size = 1 + rng() % 5;
    for (int i = 0; i < size; ++i) parts.push_back(1 + rng() % 9);
    const auto s = PartMultiset::from_parts(parts);
    const auto series = build_series(FamilyId::restricted(s), 40, Z);
    for (std::uint64_t n = 0; n <= 40; ++n) CHECK(series.coeff(n) == count_partitions_multiset(n, s));
  }
}
