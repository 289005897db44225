#include <gtest/gtest.h>

#include <random>

#include "hbcell/betti.hpp"
#include "hbcell/groebner.hpp"
#include "hbcell/projective.hpp"
#include "support.hpp"

namespace hbcell {
namespace {

using testing::small_cell;
using testing::worked_answer;
using testing::worked_cell;

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F10007 = FieldSpec::prime_field(10007);

int at(const std::map<int, int>& m, int j) {
  const auto it = m.find(j);
  return it == m.end() ? 0 : it->second;
}

int h_or_zero(const std::vector<int>& h, int i) {
  return i >= 0 && i < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(i)] : 0;
}

// beta0 from a direct minimalization of the lifted generators, beta1 from
// (1 - s)^2 h(s) = 1 - sum beta0_j s^j + sum beta1_j s^j.
std::pair<std::map<int, int>, std::map<int, int>> oracle_betti(const ParamMatrix& a) {
  const auto beta0 = minimalize_homogeneous(psi_bar(a).F);
  const auto h = hilbert_function(a.cell());
  std::map<int, int> beta1;
  for (int j = 1; j <= static_cast<int>(h.size()) + 2; ++j) {
    const int second = h_or_zero(h, j) - 2 * h_or_zero(h, j - 1) + h_or_zero(h, j - 2);
    const int b1 = second + at(beta0, j);
    if (b1 != 0) beta1[j] = b1;
  }
  return {beta0, beta1};
}

ParamMatrix with_slot(const ParamMatrix& a, int i, int j, long long value) {
  UniMatrix entries = a.entries();
  entries(i, j) = UniPoly::constant(a.field(), value);
  return check_membership(a.cell(), a.field(), entries);
}

TEST(Betti, ResolutionDegrees) {
  const auto d = resolution_degrees(worked_cell());
  EXPECT_EQ(d.p, (std::vector<int>{3, 4, 4, 5}));
  EXPECT_EQ(d.q, (std::vector<int>{5, 5, 6}));
  const auto s = resolution_degrees(small_cell());
  EXPECT_EQ(s.p, (std::vector<int>{3, 7, 8, 11}));
  EXPECT_EQ(s.q, (std::vector<int>{8, 9, 12}));
}

TEST(Betti, IndexSets) {
  const auto sets = index_sets(worked_cell(), 4);
  EXPECT_EQ(sets.w, (std::vector<int>{2, 3}));
  EXPECT_TRUE(sets.v.empty());
  const auto five = index_sets(worked_cell(), 5);
  EXPECT_EQ(five.w, (std::vector<int>{4}));
  EXPECT_EQ(five.v, (std::vector<int>{1, 2}));
  EXPECT_THROW(index_sets(make_cell({0, 2, 2}), 3), Error);
}

TEST(Betti, CanonicalMatrix) {
  const BettiTable table = betti_numbers(worked_answer());
  EXPECT_EQ(table.beta0, (std::map<int, int>{{3, 1}, {4, 2}}));
  EXPECT_EQ(table.beta1, (std::map<int, int>{{5, 1}, {6, 1}}));
  EXPECT_EQ(table.lex_beta0, (std::map<int, int>{{3, 1}, {4, 2}, {5, 1}}));
  EXPECT_EQ(table.lex_beta1, (std::map<int, int>{{5, 2}, {6, 1}}));
  const auto oracle = oracle_betti(worked_answer());
  EXPECT_EQ(table.beta0, oracle.first);
  EXPECT_EQ(table.beta1, oracle.second);
}

TEST(Betti, SingleConstantSlotDecidesDegreeEight) {
  const ParamMatrix base = sample(small_cell(), QQ, 5);
  const ParamMatrix generic = with_slot(base, 3, 1, 4);
  const ParamMatrix special = with_slot(base, 3, 1, 0);
  const BettiTable g = betti_numbers(generic);
  const BettiTable s = betti_numbers(special);
  EXPECT_EQ(at(g.beta0, 8), 0);
  EXPECT_EQ(at(g.beta1, 8), 0);
  EXPECT_EQ(at(s.beta0, 8), 1);
  EXPECT_EQ(at(s.beta1, 8), 1);
  EXPECT_EQ(g.lex_beta0, (std::map<int, int>{{3, 1}, {7, 1}, {8, 1}, {11, 1}}));
  EXPECT_EQ(g.lex_beta1, (std::map<int, int>{{8, 1}, {9, 1}, {12, 1}}));
  EXPECT_EQ(g.beta0, oracle_betti(generic).first);
  EXPECT_EQ(s.beta0, oracle_betti(special).first);
  EXPECT_EQ(s.beta1, oracle_betti(special).second);
}

TEST(Betti, MatchesOracleOnSamples) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 30; ++k) {
    const MonomialCell cell = testing::random_lex_cell(rng, 12);
    ParamMatrix a = sample(cell, F10007, rng());
    // Each constant slot is cleared with probability 1/2 on even k.
    if (k % 2 == 0) {
      UniMatrix entries = a.entries();
      const IntMatrix b = bound_matrix(cell);
      for (int i = 1; i <= b.rows(); ++i) {
        for (int j = 1; j <= b.cols(); ++j) {
          if (b(i, j) == 0 && rng() % 2) entries(i, j) = UniPoly(F10007);
        }
      }
      a = check_membership(cell, F10007, entries);
    }
    const BettiTable table = betti_numbers(a);
    const auto oracle = oracle_betti(a);
    ASSERT_EQ(table.beta0, oracle.first) << k;
    ASSERT_EQ(table.beta1, oracle.second) << k;
    int product = 0;
    for (const auto& [j, b0] : table.beta0) product += b0 * at(table.beta1, j);
    ASSERT_EQ(strata_codim_total(cell, table.beta0), product);
  }
}

TEST(Betti, Rank) {
  ScalarMatrix m(3, 3, FieldElem::zero(QQ));
  EXPECT_EQ(rank(m), 0);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) m(i, j) = FieldElem::from_int(QQ, i * j);
  }
  EXPECT_EQ(rank(m), 1);
  m(3, 3) = FieldElem::from_int(QQ, 10);
  EXPECT_EQ(rank(m), 2);
  EXPECT_EQ(rank(ScalarMatrix(0, 2)), 0);
}

TEST(Betti, CharacteristicGuard) {
  const ParamMatrix a = sample(small_cell(), FieldSpec::prime_field(7), 1);
  try {
    betti_numbers(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::char_too_small);
  }
  EXPECT_NO_THROW(betti_numbers(sample(small_cell(), FieldSpec::prime_field(11), 1)));
}

TEST(Betti, StrataCodim) {
  EXPECT_EQ(strata_codim(small_cell(), 8, 0), 0);
  EXPECT_EQ(strata_codim(small_cell(), 8, 1), 1);
  EXPECT_THROW(strata_codim(small_cell(), 8, 2), Error);
  EXPECT_EQ(strata_codim(worked_cell(), 5, 1), 2);
  EXPECT_EQ(strata_codim(worked_cell(), 5, 0), 0);
  EXPECT_EQ(strata_codim(worked_cell(), 4, 2), 0);
  EXPECT_THROW(strata_codim(worked_cell(), 4, 1), Error);
  EXPECT_EQ(strata_codim_total(small_cell(), {}), 0);
  EXPECT_EQ(strata_codim_total(small_cell(), {{8, 1}}), 1);
  EXPECT_THROW(strata_codim_total(small_cell(), {{4, 1}}), Error);
}

}  // namespace
}  // namespace hbcell
