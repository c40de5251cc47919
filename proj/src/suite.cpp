#include <numeric>

#include "qcong/congruence.hpp"
#include "qcong/periodicity.hpp"

namespace qcong {

namespace {

constexpr std::uint64_t kMod4Bound = 2000;
constexpr std::uint64_t kMod8Bound = 4620;
constexpr std::uint64_t kWideBound = 4000;

struct SuiteBuilder {
  std::vector<CongruenceClaim> claims;

  // a(l n + offset) for n >= n_start, with offset folded into [0, l).
  CongruenceClaim& add(const std::string& prefix, const FamilyId& family, std::uint64_t l, std::uint64_t offset,
                       std::uint64_t n_start, std::uint64_t modulus, ClaimKind kind, std::uint64_t bound) {
    CongruenceClaim c;
    c.label = prefix + "-" + family.short_name() + "-" + progression_text(l, offset) + "-mod" + std::to_string(modulus);
    c.family = family;
    c.ap_modulus = l;
    c.residue = offset % l;
    c.n_start = n_start + offset / l;
    c.modulus = modulus;
    c.kind = std::move(kind);
    c.default_bound = bound;
    claims.push_back(std::move(c));
    return claims.back();
  }
};

std::uint64_t lcm_range(std::uint64_t from, std::uint64_t to, std::uint64_t step) {
  std::uint64_t l = 1;
  for (std::uint64_t j = from; j <= to; j += step) l = std::lcm(l, j);
  return l;
}

// 3465-progressions need bound 2 * 3465 + 11 before every row has two members.
std::uint64_t mod4_bound_for(std::uint64_t l) { return l == 3465 ? 2 * l + 11 : kMod4Bound; }

void even_rowed_mod4(SuiteBuilder& s) {
  for (std::uint64_t k = 2; k <= 12; k += 2) {
    const std::uint64_t l = lcm_range(1, k - 1, 2);
    const auto family = FamilyId::k_rowed(k);
    for (std::uint64_t p = 3; p < k; p += 2) {
      if (!is_prime(p)) continue;
      std::uint64_t pr = 1;
      for (unsigned r = 1; r <= ord_prime(l, p); ++r) {
        pr *= p;
        s.add("thm1.4", family, l, pr, 1, 4, ConstantResidue{r % 2 == 1 ? 0u : 2u}, mod4_bound_for(l));
      }
    }
    s.add("thm1.4", family, l, 0, 1, 4, ConstantResidue{k % 4 == 0 ? 0u : 2u}, mod4_bound_for(l));
  }

  struct Row {
    std::uint64_t k, l;
    std::vector<std::uint64_t> offsets;
    std::uint64_t c;
  };
  const std::vector<Row> rows = {
      {4, 3, {0}, 0},          {6, 15, {3, 5}, 0},          {6, 15, {0}, 2},    {8, 105, {0, 3, 5, 7}, 0},
      {10, 315, {3, 5, 7}, 0}, {10, 315, {0, 9}, 2},        {12, 3465, {0, 3, 5, 7, 11}, 0},
      {12, 3465, {9}, 2},
  };
  for (const auto& row : rows) {
    for (auto b : row.offsets) {
      s.add("cor3.3", FamilyId::k_rowed(row.k), row.l, b, 1, 4, ConstantResidue{row.c}, mod4_bound_for(row.l));
    }
  }
}

void odd_rowed_mod4(SuiteBuilder& s) {
  const auto over = FamilyId::overpartition();
  for (std::uint64_t k = 0; k <= 6; ++k) {
    s.add("thm1.5", FamilyId::k_rowed(2 * k + 1), 2, 1, 0, 4, EquivalentTo{over}, kMod4Bound);
  }
  s.add("cor3.2", FamilyId::plane(), 2, 1, 0, 4, EquivalentTo{over}, kMod4Bound);

  for (std::uint64_t k = 2; k <= 4; ++k) {
    const std::uint64_t l = lcm_range(2, 2 * k, 2);
    const auto family = FamilyId::k_rowed(2 * k + 1);
    for (unsigned j = 2; (std::uint64_t{1} << (j - 1)) <= k; j += 2) {
      s.add("thm1.6", family, l, std::uint64_t{1} << j, 1, 4, EquivalentTo{over}, kMod4Bound);
    }
    if (k % 2 == 0) s.add("thm1.6", family, l, 0, 0, 4, EquivalentTo{over}, kMod4Bound);
  }

  for (std::uint64_t alpha_scale : {1u, 9u}) {
    const std::uint64_t l = 54 * alpha_scale;
    const std::uint64_t b = 45 * alpha_scale;
    s.add("cor3.4", FamilyId::plane(), l, b, 0, 4, ConstantResidue{0}, kMod4Bound);
    for (std::uint64_t k = 0; k <= 6; ++k) {
      s.add("cor3.4", FamilyId::k_rowed(2 * k + 1), l, b, 0, 4, ConstantResidue{0}, kMod4Bound);
    }
  }
}

void mod8(SuiteBuilder& s) {
  const auto over = FamilyId::overpartition();
  const auto pl4 = FamilyId::k_rowed(4);
  const auto pl5 = FamilyId::k_rowed(5);
  const auto pl8 = FamilyId::k_rowed(8);
  s.add("thm1.7", pl4, 12, 0, 1, 8, ConstantResidue{0}, kMod8Bound);
  s.add("thm1.7", pl4, 6, 3, 1, 8, ConstantResidue{0}, kMod8Bound);
  for (std::uint64_t b : {0u, 3u, 9u, 105u}) s.add("thm1.7", pl8, 210, b, 1, 8, ConstantResidue{0}, kMod8Bound);

  auto& odd = s.add("thm1.8", over, 2, 1, 0, 8, PredicateResidue{Predicate::OddNonsquareZero}, kMod8Bound);
  odd.label = "thm1.8-pbar-oddnonsq-mod8";

  s.add("thm1.9", pl5, 12, 1, 0, 8, EquivalentTo{over}, kMod8Bound);
  s.add("thm1.9", pl5, 12, 5, 0, 8, EquivalentTo{over}, kMod8Bound);

  for (std::uint64_t alpha : {3u, 4u}) {
    for (std::uint64_t beta : {0u, 1u}) {
      const std::uint64_t l = (std::uint64_t{1} << alpha) * (beta ? 3 : 1);
      s.add("cor3.10", over, l, 5, 0, 8, ConstantResidue{0}, kMod8Bound);
    }
  }
  s.add("cor3.11", over, 4, 3, 0, 8, ConstantResidue{0}, kMod8Bound);
  for (std::uint64_t alpha : {3u, 4u}) {
    for (std::uint64_t beta : {1u, 2u}) {
      const std::uint64_t l = (std::uint64_t{1} << alpha) * (beta == 1 ? 3 : 9);
      s.add("cor3.12", pl5, l, 5, 0, 8, ConstantResidue{0}, kMod8Bound);
    }
  }
  s.add("ext", over, 9, 6, 0, 8, ConstantResidue{0}, kMod8Bound);
}

std::vector<CongruenceClaim> make_suite() {
  SuiteBuilder s;
  const auto plane = FamilyId::plane();

  auto& split = s.add("thm1.2", plane, 1, 0, 1, 4, PredicateResidue{Predicate::SquareOrTwiceSquare}, kMod4Bound);
  split.label = "thm1.2-pl-sqsplit-mod4";
  auto& odd_split = s.add("thm2.6", FamilyId::odd_overpartition(), 1, 0, 1, 4,
                          PredicateResidue{Predicate::SquareOrTwiceSquare}, kMod4Bound);
  odd_split.label = "thm2.6-pobar-sqsplit-mod4";
  auto& same = s.add("thm1.2", plane, 1, 0, 1, 4, EquivalentTo{FamilyId::odd_overpartition()}, kMod4Bound);
  same.label = "thm1.2-pl-eq-pobar-mod4";
  auto& formula = s.add("thm1.3", plane, 1, 0, 2, 4, PredicateResidue{Predicate::OddDivisorSignature}, kMod4Bound);
  formula.label = "thm1.3-pl-odddiv-mod4";
  s.add("cor3.1", plane, 4, 3, 0, 4, ConstantResidue{0}, kMod4Bound);

  even_rowed_mod4(s);
  odd_rowed_mod4(s);

  const auto pl4 = FamilyId::k_rowed(4);
  auto& sum = s.add("ext", pl4, 4, 0, 0, 4, SumResidue{{{pl4, 1}, {pl4, 2}, {pl4, 3}}, 0}, kMod4Bound);
  sum.label = "ext-pl4-4n+1+2+3-sum-mod4";

  mod8(s);

  const auto over = FamilyId::overpartition();
  s.add("ext", over, 8, 7, 0, 64, ConstantResidue{0}, kWideBound);
  s.add("ext", over, 27, 18, 0, 12, ConstantResidue{0}, kWideBound);
  s.add("ext", over, 243, 162, 0, 12, ConstantResidue{0}, kWideBound);
  return s.claims;
}

}  // namespace

const std::vector<CongruenceClaim>& builtin_suite() {
  static const std::vector<CongruenceClaim> suite = make_suite();
  return suite;
}

}  // namespace qcong
