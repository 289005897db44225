#include <gtest/gtest.h>

#include <random>

#include "hbcell/canonical.hpp"
#include "hbcell/groebner.hpp"
#include "support.hpp"

namespace hbcell {
namespace {

using testing::bi_matrix;
using testing::worked_answer;
using testing::worked_cell;
using testing::worked_generators;

const FieldSpec QQ = FieldSpec::rationals();

std::vector<BiPoly> minors_of(const BiMatrix& h) { return signed_maximal_minors<2>(h); }

TEST(Canonical, InferCell) {
  EXPECT_EQ(infer_cell(worked_generators()), worked_cell());
}

TEST(Canonical, PrepareClearsPureXPowers) {
  const IdealBasis basis = prepare_basis(worked_generators(), worked_cell());
  ASSERT_EQ(basis.f.size(), 4u);
  EXPECT_EQ(basis.f[0], worked_generators()[0]);
  EXPECT_EQ(basis.f[1].to_string(),
            "x^2*y^2 - 2*y^4 - 2*x*y^2 - x^2 - 2*x*y + 5*y^2 + 3*x + y - 2");
  EXPECT_EQ(basis.f[2], worked_generators()[2]);
}

TEST(Canonical, PrepareRejectsWrongCell) {
  EXPECT_THROW(prepare_basis(worked_generators(), make_cell({0, 2, 4, 5})), Error);
}

TEST(Canonical, RawSyzygies) {
  const IdealBasis basis = prepare_basis(worked_generators(), worked_cell());
  const RawSyzygyMatrix raw = extract_syzygies(basis);
  EXPECT_EQ(raw.h, bi_matrix(QQ, {{"y^2 - 1", "-2*y + 1", "y^2 - 1"},
                                  {"-x + y", "y + 1", "3"},
                                  {"1", "-x - y + 1", "y^2 + 1"},
                                  {"0", "1", "-x + y + 1"}}));
  for (const auto& r : syzygy_residuals<2>(basis.f, raw.h)) EXPECT_TRUE(r.is_zero());
}

TEST(Canonical, TracedMovesMatchHandComputation) {
  const CanonicalRun run = canonicalize_traced(worked_generators());
  ASSERT_EQ(run.moves.size(), 3u);
  const std::vector<std::pair<int, int>> order{{3, 2}, {1, 3}, {2, 3}};
  const std::vector<std::vector<std::vector<std::string>>> halfway{
      {{"y^2 - 1", "-2*y + 1", "y^2 - 1"},
       {"-x + y", "y + 1", "3"},
       {"-x + y + 1", "-x + 2", "y^2 + 4"},
       {"0", "1", "-x + y + 1"}},
      {{"y^2 + 2*y - 2", "-2*y + 1", "-2*y + 1"},
       {"-x - 1", "y + 1", "x + 4"},
       {"y - 1", "-x + 2", "y^2 - y + 5"},
       {"-1", "1", "-x + y + 2"}},
      {{"y^2 + 2*y - 2", "-2*y + 1", "0"},
       {"-x - 2", "y + 2", "4"},
       {"y - 1", "-x + 2", "y^2 + x - y + 3"},
       {"-1", "1", "-x + y + 1"}}};
  const std::vector<std::vector<std::vector<std::string>>> after{
      {{"y^2 + 2*y - 2", "-2*y + 1", "y^2 - 1"},
       {"-x - 1", "y + 1", "3"},
       {"y - 1", "-x + 2", "y^2 + 4"},
       {"-1", "1", "-x + y + 1"}},
      {{"y^2 + 2*y - 2", "-2*y + 1", "-2*y + 1"},
       {"-x - 2", "y + 2", "y + 6"},
       {"y - 1", "-x + 2", "y^2 - y + 5"},
       {"-1", "1", "-x + y + 2"}},
      {{"y^2 + 2*y - 2", "-2*y + 1", "0"},
       {"-x - 2", "y + 2", "4"},
       {"y - 2", "-x + 3", "y^2 + 4"},
       {"-1", "1", "-x + y + 1"}}};
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(std::pair(run.moves[k].i, run.moves[k].j), order[k]);
    EXPECT_EQ(run.moves[k].halfway, bi_matrix(QQ, halfway[k])) << "move " << k;
    EXPECT_EQ(run.moves[k].after, bi_matrix(QQ, after[k])) << "move " << k;
  }
  EXPECT_EQ(run.result, worked_answer());
}

TEST(Canonical, EveryMovePreservesTheIdeal) {
  const CanonicalRun run = canonicalize_traced(worked_generators());
  const auto gens = worked_generators();
  EXPECT_TRUE(same_ideal<2>(minors_of(run.raw.h), gens));
  for (const auto& move : run.moves) {
    EXPECT_TRUE(same_ideal<2>(minors_of(move.after), gens));
    for (const auto& r : syzygy_residuals<2>(minors_of(move.after), move.after)) EXPECT_TRUE(r.is_zero());
  }
}

TEST(Canonical, ResultGeneratesInputIdeal) {
  const ParamMatrix a = canonicalize(worked_generators());
  EXPECT_TRUE(same_ideal<2>(psi(a).f, worked_generators()));
  const auto f = psi(a).f;
  const auto expected = testing::worked_answer_generators();
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(f[i].to_string(), expected[i]);
}

TEST(Canonical, MonomialIdealGivesZeroMatrix) {
  const MonomialCell cell = testing::small_cell();
  std::vector<BiPoly> gens;
  for (const auto& g : cell.minimal_generators()) gens.push_back(BiPoly::monomial(QQ, g));
  EXPECT_EQ(canonicalize(gens), zero_matrix(cell, QQ));
}

TEST(Canonical, ThreeReducedPoints) {
  // The points (0,0), (1,0), (0,1) are cut out by x^2 - x, x*y, y^2 - y.
  const std::vector<BiPoly> gens{BiPoly::parse(QQ, "x^2 - x"), BiPoly::parse(QQ, "x*y"),
                                 BiPoly::parse(QQ, "y^2 - y")};
  const ParamMatrix a = canonicalize(gens);
  EXPECT_EQ(a.cell(), make_cell({0, 1, 2}));
  EXPECT_TRUE(same_ideal<2>(psi(a).f, gens));
}

TEST(Canonical, RoundTripFromPsi) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 40; ++k) {
    const MonomialCell cell = testing::random_lex_cell(rng, 12);
    const FieldSpec field = k % 2 ? QQ : FieldSpec::prime_field(10007);
    const ParamMatrix a = sample(cell, field, rng());
    const auto f = psi(a).f;
    ASSERT_EQ(canonicalize(f, cell), a);
    // A triangular change of generators keeps the ideal and the answer.
    std::vector<BiPoly> mixed(f.size(), BiPoly(field));
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i; j < f.size(); ++j) mixed[i] += f[j];
    }
    mixed.push_back(f.back().mul_term(xy_monomial(1, 1), FieldElem::one(field)));
    ASSERT_EQ(canonicalize(mixed), a);
  }
}

TEST(Canonical, MoveRejectsBadSlots) {
  const RawSyzygyMatrix raw = extract_syzygies(prepare_basis(worked_generators(), worked_cell()));
  EXPECT_THROW(reduction_move(raw, 2, 2), Error);
  EXPECT_THROW(reduction_move(raw, 4, 1), Error);
  EXPECT_THROW(reduction_move(raw, 9, 1), Error);
  try {
    reduction_move(raw, 4, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::move_not_applicable);
  }
  EXPECT_NO_THROW(reduction_move(raw, 3, 2));
}

TEST(Canonical, MoveCap) {
  EXPECT_EQ(move_cap(worked_cell()), 10 * 4 * 3 * 3);
}

TEST(Canonical, NonLexCellKeepsIdeal) {
  const std::vector<BiPoly> gens{BiPoly::parse(QQ, "x^2 + y"), BiPoly::parse(QQ, "y^2 + x")};
  const MonomialCell cell = infer_cell(gens);
  EXPECT_EQ(cell, make_cell({0, 2, 2}));
  EXPECT_FALSE(cell.lex_segment());
  const IdealBasis basis = prepare_basis(gens, cell);
  EXPECT_EQ(basis.f[1].to_string(), "x*y^2 - y");
  EXPECT_TRUE(same_ideal<2>(basis.f, gens));
  const ParamMatrix a = canonicalize(gens);
  EXPECT_TRUE(same_ideal<2>(psi(a).f, gens));
}

}  // namespace
}  // namespace hbcell
