#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hbcell/cell.hpp"
#include "hbcell/grid.hpp"
#include "hbcell/poly.hpp"

namespace hbcell {

using UniMatrix = Grid<UniPoly>;
using BiMatrix = Grid<BiPoly>;
using TriMatrix = Grid<TriPoly>;

/// A point of the affine space A(I0): a (t+1) x t matrix of polynomials in
/// y obeying the bound matrix of its cell. Built by check_membership.
class ParamMatrix {
 public:
  const MonomialCell& cell() const noexcept { return cell_; }
  const FieldSpec& field() const noexcept { return field_; }
  const UniMatrix& entries() const noexcept { return entries_; }
  const UniPoly& operator()(int i, int j) const { return entries_(i, j); }
  int rows() const noexcept { return entries_.rows(); }
  int cols() const noexcept { return entries_.cols(); }

  friend bool operator==(const ParamMatrix&, const ParamMatrix&) = default;

 private:
  friend ParamMatrix check_membership(const MonomialCell&, const FieldSpec&, UniMatrix);

  ParamMatrix(MonomialCell cell, FieldSpec field, UniMatrix entries)
      : cell_(std::move(cell)), field_(field), entries_(std::move(entries)) {}

  MonomialCell cell_;
  FieldSpec field_;
  UniMatrix entries_;
};

/// Every slot (i,j) with deg a_{i,j} > b_{i,j}, in row-major order.
std::vector<SlotViolation> bound_violations(const IntMatrix& bounds, const UniMatrix& a);

/// Validates shape, field and the bound matrix; throws BoundViolationError
/// listing every offending slot.
ParamMatrix check_membership(const MonomialCell& cell, const FieldSpec& field, UniMatrix a);

ParamMatrix zero_matrix(const MonomialCell& cell, const FieldSpec& field);

/// X: y^{d_i} at (i,i), -x at (i+1,i).
BiMatrix monomial_matrix(const MonomialCell& cell, const FieldSpec& field);

/// X + A.
BiMatrix hilbert_burch_matrix(const ParamMatrix& a);

/// Exact determinant by Laplace expansion along columns, with sub-minors
/// memoized by row subset.
template <std::size_t N>
Polynomial<N> determinant(const Grid<Polynomial<N>>& m);

/// For an (n+1) x n matrix M: the n+1 values (-1)^{n-i} det(M with row i+1
/// deleted), i = 0..n, sharing one table of sub-minors.
template <std::size_t N>
std::vector<Polynomial<N>> signed_maximal_minors(const Grid<Polynomial<N>>& m);

/// Row vector f times M, one entry per column.
template <std::size_t N>
std::vector<Polynomial<N>> syzygy_residuals(std::span<const Polynomial<N>> f,
                                            const Grid<Polynomial<N>>& m);

/// Generators f_0..f_t of an ideal in the cell, in(f_i) = x^{t-i} y^{m_i}.
struct IdealBasis {
  MonomialCell cell;
  std::vector<BiPoly> f;

  friend bool operator==(const IdealBasis&, const IdealBasis&) = default;
};

/// psi(A): the signed maximal minors of X + A, all monic.
IdealBasis psi(const ParamMatrix& a);

/// Throws LEADING_TERM_MISMATCH unless f has t+1 entries with
/// in(f_i) = x^{t-i} y^{m_i}.
void check_leading_terms(const MonomialCell& cell, std::span<const BiPoly> f);

/// Reduces the t S-polynomials y^{d_i} f_{i-1} - x f_i against f; true iff
/// all vanish, which certifies f as a Groebner basis.
bool verify_groebner_property(const IdealBasis& basis);

/// The coefficients of A listed slot by slot in row-major order, degree
/// 0 first; parameter_count(cell) values in total.
std::vector<FieldElem> coordinates(const ParamMatrix& a);

/// Inverse of coordinates.
ParamMatrix from_coordinates(const MonomialCell& cell, const FieldSpec& field,
                             std::span<const FieldElem> coords);

/// parameter_count(cell) coefficients drawn from a 64-bit Mersenne
/// twister: integers in [-9, 9] over QQ, residues in [0, p) over F_p.
std::vector<FieldElem> sample_coordinates(const MonomialCell& cell, const FieldSpec& field,
                                          std::uint64_t seed);

ParamMatrix sample(const MonomialCell& cell, const FieldSpec& field, std::uint64_t seed);

}  // namespace hbcell
