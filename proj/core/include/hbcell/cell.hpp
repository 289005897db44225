#pragma once

#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hbcell/grid.hpp"
#include "hbcell/poly.hpp"

namespace hbcell {

/// The Artinian monomial ideal
///   I0 = (x^t, x^{t-1} y^{m_1}, ..., x y^{m_{t-1}}, y^{m_t})
/// of K[x,y], described by its m-vector. Accessors taking an index use the
/// 1-based convention i = 1..t (m(0) = 0 is also accepted).
class MonomialCell {
 public:
  /// Validates m_0 = 0, m non-decreasing, t >= 1 and m_1 >= 1.
  explicit MonomialCell(std::vector<int> m);

  int t() const noexcept { return static_cast<int>(m_.size()) - 1; }
  int m(int i) const { return m_.at(static_cast<std::size_t>(i)); }
  int d(int i) const { return m(i) - m(i - 1); }
  std::span<const int> m_vector() const noexcept { return m_; }
  std::vector<int> d_vector() const;

  /// d_i > 0 for every i.
  bool lex_segment() const noexcept;

  /// dim_K(R / I0) = sum of the m_i.
  int colength() const noexcept;

  /// x^{t-i} y^{m_i}, i = 0..t.
  Monomial<2> generator(int i) const;

  /// True iff x^a y^b lies in I0.
  bool contains(const Monomial<2>& mono) const;

  /// Minimal monomial generators, in the order i = 0..t (x-degree descending).
  std::vector<Monomial<2>> minimal_generators() const;

  friend bool operator==(const MonomialCell&, const MonomialCell&) = default;

 private:
  std::vector<int> m_;
};

MonomialCell make_cell(std::vector<int> m);

/// The cell whose ideal is generated by the given monomials, which must
/// contain pure powers of both x and y.
MonomialCell cell_from_monomials(std::span<const Monomial<2>> gens);

/// h_i = #{monomials of degree i outside I0}, stored up to the last nonzero entry.
std::vector<int> hilbert_function(const MonomialCell& cell);

/// u_{i,j} = i - j + m_j - m_{i-1}, (t+1) x t.
IntMatrix degree_matrix(const MonomialCell& cell);

/// b_{i,j} = min(u_{i,j} - 1, d_i - 1) for i <= j, min(u_{i,j}, d_j - 1) for i > j.
IntMatrix bound_matrix(const MonomialCell& cell);

/// Grade bounds satisfied by syzygies extracted from an arbitrary Groebner
/// basis: u_{i,j} - 1 for i <= j, u_{i,j} for i > j.
IntMatrix grade_matrix(const MonomialCell& cell);

/// N = sum over b_{i,j} >= 0 of (b_{i,j} + 1); defined for every cell.
int parameter_count(const MonomialCell& cell);

/// colength + 1 + sum_{i>=1} h_i (h_{i-1} - h_{i-2}).
int dimension_formula(std::span<const int> h);

/// 1 + sum_{i>=0} h_i (h_{i-1} - h_{i-2} + 1).
int dimension_formula_compact(std::span<const int> h);

/// Dimension of the Groebner cell; lex-segment cells only. Computes the
/// parameter count and both closed forms and checks they agree.
int dimension(const MonomialCell& cell);

struct DimensionBounds {
  int lower;
  int upper;
};

/// (max{n + t, n + 2}, 2n) for n = colength >= 2.
DimensionBounds dimension_bounds(const MonomialCell& cell);

struct SpecialIndices {
  std::set<int> three_or_more;  // {i : d_i >= 3}
  std::set<int> two_or_more;    // {j : d_j >= 2}
};

SpecialIndices special_indices(const MonomialCell& cell);

/// Number of minimal generators of I0 per degree; lex-segment cells only.
std::map<int, int> lex_betti(const MonomialCell& cell);

/// Below-diagonal slots of the bound matrix admitting degree exactly 1.
int below_diagonal_linear_slots(const MonomialCell& cell);

/// Below-diagonal slots forced to zero (b_{i,j} < 0).
int below_diagonal_zero_slots(const MonomialCell& cell);

/// Every lex-segment cell with colength <= max_colength, in lexicographic
/// order of the m-vector.
std::vector<MonomialCell> enumerate_lex_cells(int max_colength);

}  // namespace hbcell
