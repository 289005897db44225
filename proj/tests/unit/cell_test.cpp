#include <gtest/gtest.h>

#include "hbcell/cell.hpp"
#include "support.hpp"

namespace hbcell {
namespace {

using testing::small_cell;
using testing::wide_cell;
using testing::worked_cell;

// Counts standard monomials degree by degree straight from the generators.
std::vector<int> brute_hilbert(const MonomialCell& cell) {
  const auto gens = cell.minimal_generators();
  std::vector<int> h;
  for (int deg = 0;; ++deg) {
    int count = 0;
    for (int a = 0; a <= deg; ++a) {
      const auto mono = xy_monomial(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(deg - a));
      bool inside = false;
      for (const auto& g : gens) inside = inside || g.divides(mono);
      count += inside ? 0 : 1;
    }
    if (count == 0) break;
    h.push_back(count);
  }
  return h;
}

int brute_parameter_count(const std::vector<int>& m) {
  const int t = static_cast<int>(m.size()) - 1;
  int n = 0;
  for (int i = 1; i <= t + 1; ++i) {
    for (int j = 1; j <= t; ++j) {
      const int u = i - j + m[j] - m[i - 1];
      const int b = i <= j ? std::min(u - 1, m[i] - m[i - 1] - 1) : std::min(u, m[j] - m[j - 1] - 1);
      if (b >= 0) n += b + 1;
    }
  }
  return n;
}

int h_or_zero(const std::vector<int>& h, int i) {
  return i >= 0 && i < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(i)] : 0;
}

std::vector<std::vector<int>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= m.rows(); ++i) {
    out.emplace_back();
    for (int j = 1; j <= m.cols(); ++j) out.back().push_back(m(i, j));
  }
  return out;
}

TEST(Cell, Validation) {
  EXPECT_THROW(make_cell({0}), Error);
  EXPECT_THROW(make_cell({1, 2}), Error);
  EXPECT_THROW(make_cell({0, 0, 3}), Error);
  EXPECT_THROW(make_cell({0, 3, 2}), Error);
  EXPECT_NO_THROW(make_cell({0, 2, 2}));
  EXPECT_FALSE(make_cell({0, 2, 2}).lex_segment());
  EXPECT_TRUE(worked_cell().lex_segment());
}

TEST(Cell, Accessors) {
  const auto c = small_cell();
  EXPECT_EQ(c.t(), 3);
  EXPECT_EQ(c.d_vector(), (std::vector<int>{5, 2, 4}));
  EXPECT_EQ(c.colength(), 23);
  EXPECT_EQ(c.generator(1), xy_monomial(2, 5));
  EXPECT_TRUE(c.contains(xy_monomial(1, 7)));
  EXPECT_TRUE(c.contains(xy_monomial(3, 0)));
  EXPECT_FALSE(c.contains(xy_monomial(2, 4)));
  EXPECT_FALSE(c.contains(xy_monomial(0, 10)));
}

TEST(Cell, FromMonomials) {
  const std::vector<Monomial<2>> gens{xy_monomial(0, 5), xy_monomial(3, 0), xy_monomial(2, 2),
                                      xy_monomial(1, 3), xy_monomial(2, 3)};
  EXPECT_EQ(cell_from_monomials(gens), worked_cell());
  const std::vector<Monomial<2>> missing{xy_monomial(2, 0), xy_monomial(1, 1)};
  EXPECT_THROW(cell_from_monomials(missing), Error);
}

TEST(Cell, HilbertFunctionGoldens) {
  EXPECT_EQ(hilbert_function(small_cell()), (std::vector<int>{1, 2, 3, 3, 3, 3, 3, 2, 1, 1, 1}));
  EXPECT_EQ(hilbert_function(wide_cell()),
            (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 12, 12, 9, 9, 9, 9, 6, 3, 3}));
}

TEST(Cell, HilbertFunctionMatchesBruteForce) {
  for (const auto& c : enumerate_lex_cells(16)) {
    ASSERT_EQ(hilbert_function(c), brute_hilbert(c));
  }
  const auto non_lex = make_cell({0, 2, 2, 5});
  EXPECT_EQ(hilbert_function(non_lex), brute_hilbert(non_lex));
}

TEST(Cell, BoundMatrixSmall) {
  EXPECT_EQ(rows_of(bound_matrix(small_cell())),
            (std::vector<std::vector<int>>{{4, 4, 4}, {1, 1, 1}, {0, 1, 3}, {-3, -2, 1}}));
  EXPECT_EQ(rows_of(bound_matrix(worked_cell())),
            (std::vector<std::vector<int>>{{1, 1, 1}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}}));
}

TEST(Cell, BoundMatrixWideShape) {
  // -1 marks a slot forced to zero.
  std::vector<std::vector<int>> expected(13, std::vector<int>(12, 0));
  for (int j = 0; j < 12; ++j) expected[0][static_cast<std::size_t>(j)] = 2;
  for (int i = 1; i <= 3; ++i) expected[static_cast<std::size_t>(i)][0] = 1;
  for (int j = 3; j < 12; ++j) expected[3][static_cast<std::size_t>(j)] = 4;
  for (int i = 4; i <= 12; ++i) {
    for (int j = 0; j < 3; ++j) expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
  }
  for (int i = 4; i <= 6; ++i) expected[static_cast<std::size_t>(i)][3] = 1;
  for (int j = 6; j < 12; ++j) expected[6][static_cast<std::size_t>(j)] = 1;
  for (int i = 7; i <= 9; ++i) expected[static_cast<std::size_t>(i)][6] = 1;
  for (int j = 9; j < 12; ++j) expected[9][static_cast<std::size_t>(j)] = 2;
  for (int i = 10; i <= 12; ++i) {
    for (int j = 3; j < 9; ++j) expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    expected[static_cast<std::size_t>(i)][9] = 1;
  }
  auto actual = rows_of(bound_matrix(wide_cell()));
  for (auto& row : actual) {
    for (auto& v : row) v = std::max(v, -1);
  }
  EXPECT_EQ(actual, expected);
}

TEST(Cell, DimensionGoldens) {
  EXPECT_EQ(dimension(small_cell()), 30);
  EXPECT_EQ(dimension(wide_cell()), 195);
  EXPECT_EQ(dimension(worked_cell()), 19);
  EXPECT_EQ(below_diagonal_linear_slots(wide_cell()), 12);
  EXPECT_EQ(below_diagonal_linear_slots(small_cell()), 3);
  EXPECT_EQ(below_diagonal_zero_slots(small_cell()), 2);
}

TEST(Cell, ForcedZeroCountAgreesWithHilbertSum) {
  for (const auto& c : enumerate_lex_cells(18)) {
    const auto h = hilbert_function(c);
    int expected = 0;
    for (int i = c.t() + 1; i < static_cast<int>(h.size()); ++i) {
      expected += h_or_zero(h, i) * (h_or_zero(h, i - 2) - h_or_zero(h, i - 1));
    }
    ASSERT_EQ(below_diagonal_zero_slots(c), expected) << c.colength();
    ASSERT_EQ(below_diagonal_linear_slots(c), h_or_zero(h, c.t()));
  }
  EXPECT_EQ(below_diagonal_zero_slots(wide_cell()), 45);
}

TEST(Cell, DimensionExhaustive) {
  for (const auto& c : enumerate_lex_cells(18)) {
    const std::vector<int> m(c.m_vector().begin(), c.m_vector().end());
    const auto h = brute_hilbert(c);
    int compact = 1;
    for (int i = 0; i <= static_cast<int>(h.size()) + 1; ++i) {
      compact += h_or_zero(h, i) * (h_or_zero(h, i - 1) - h_or_zero(h, i - 2) + 1);
    }
    const int dim = dimension(c);
    ASSERT_EQ(dim, brute_parameter_count(m));
    ASSERT_EQ(dim, compact);
    if (c.colength() >= 2) {
      const auto bounds = dimension_bounds(c);
      ASSERT_GE(dim, bounds.lower);
      ASSERT_LE(dim, bounds.upper);
    }
  }
}

TEST(Cell, EnumerationCount) {
  // Partitions into distinct parts, summed over sizes 1..18.
  std::vector<long> q(19, 0);
  q[0] = 1;
  for (int part = 1; part <= 18; ++part) {
    for (int s = 18; s >= part; --s) q[static_cast<std::size_t>(s)] += q[static_cast<std::size_t>(s - part)];
  }
  long total = 0;
  for (int s = 1; s <= 18; ++s) total += q[static_cast<std::size_t>(s)];
  const auto cells = enumerate_lex_cells(18);
  EXPECT_EQ(static_cast<long>(cells.size()), total);
  for (std::size_t k = 1; k < cells.size(); ++k) {
    EXPECT_TRUE(std::lexicographical_compare(cells[k - 1].m_vector().begin(), cells[k - 1].m_vector().end(),
                                             cells[k].m_vector().begin(), cells[k].m_vector().end()));
  }
}

TEST(Cell, Bookkeeping) {
  const auto c = small_cell();
  const IntMatrix u = degree_matrix(c);
  const IntMatrix g = grade_matrix(c);
  for (int i = 1; i <= c.t() + 1; ++i) {
    for (int j = 1; j <= c.t(); ++j) {
      EXPECT_EQ(g(i, j), i <= j ? u(i, j) - 1 : u(i, j));
    }
  }
  EXPECT_EQ(u(1, 1), 5);
  EXPECT_EQ(u(2, 1), 1);
  const auto s = special_indices(c);
  EXPECT_EQ(s.three_or_more, (std::set<int>{1, 3}));
  EXPECT_EQ(s.two_or_more, (std::set<int>{1, 2, 3}));
  const auto w = special_indices(wide_cell());
  EXPECT_EQ(w.three_or_more, (std::set<int>{1, 4, 10}));
  EXPECT_EQ(w.two_or_more, (std::set<int>{1, 4, 7, 10}));
  const auto b = dimension_bounds(c);
  EXPECT_EQ(b.lower, 26);
  EXPECT_EQ(b.upper, 46);
}

TEST(Cell, LexBettiAgreesWithHilbertDifferences) {
  for (const auto& c : enumerate_lex_cells(14)) {
    const auto beta = lex_betti(c);
    const auto h = hilbert_function(c);
    // Consecutive generators of a lex ideal have one syzygy each, in degree
    // of their lcm; the second difference of h is syzygies minus generators.
    std::map<int, int> syz;
    for (int i = 1; i <= c.t(); ++i) ++syz[c.t() - i + 1 + c.m(i)];
    int total = 0;
    for (int i = 1; i <= static_cast<int>(h.size()) + 2; ++i) {
      const int second = h_or_zero(h, i) - 2 * h_or_zero(h, i - 1) + h_or_zero(h, i - 2);
      const int b0 = beta.count(i) ? beta.at(i) : 0;
      const int b1 = syz.count(i) ? syz.at(i) : 0;
      ASSERT_EQ(second, b1 - b0) << "degree " << i;
      total += b0;
    }
    ASSERT_EQ(total, c.t() + 1);
  }
  EXPECT_EQ(lex_betti(worked_cell()), (std::map<int, int>{{3, 1}, {4, 2}, {5, 1}}));
}

TEST(Cell, LexOnlyOperationsRejectNonLex) {
  const auto c = make_cell({0, 2, 2, 4});
  EXPECT_THROW(dimension(c), Error);
  EXPECT_THROW(lex_betti(c), Error);
  EXPECT_THROW(dimension_bounds(c), Error);
  EXPECT_THROW(dimension_bounds(make_cell({0, 1})), Error);
  EXPECT_NO_THROW(parameter_count(c));
}

}  // namespace
}  // namespace hbcell
