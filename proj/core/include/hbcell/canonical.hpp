#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hbcell/hilburch.hpp"

namespace hbcell {

/// The cell of in(<gens>), read off the reduced Groebner basis.
MonomialCell infer_cell(std::span<const BiPoly> gens);

/// Monic f_0..f_t with in(f_i) = x^{t-i} y^{m_i} generating <gens>, where
/// only f_0 has a support monomial divisible by x^t. Generators that
/// already have these leading terms are kept; otherwise they are taken
/// from the reduced Groebner basis. Throws WRONG_INITIAL_IDEAL when
/// in(<gens>) differs from the ideal of `cell`.
IdealBasis prepare_basis(std::span<const BiPoly> gens, const MonomialCell& cell);

/// X + A_raw with A_raw in K[y], produced by the syzygies of a basis.
struct RawSyzygyMatrix {
  MonomialCell cell;
  BiMatrix h;

  /// h - X entrywise; INTERNAL_REDUCTION_FAILURE if some entry involves x.
  UniMatrix a() const;

  friend bool operator==(const RawSyzygyMatrix&, const RawSyzygyMatrix&) = default;
};

/// Column i holds the reduction y^{d_i} f_{i-1} - x f_i + sum_k a_{k+1,i} f_k = 0
/// with quotients in K[y] obeying the grade matrix.
RawSyzygyMatrix extract_syzygies(const IdealBasis& basis);

/// Red(i,j). For i < j the pivot is h(i,i): column j loses q times column i,
/// then row i+1 gains q times row j+1. For i > j the pivot is h(j,j): row i
/// loses q times row j, then column j-1 gains q times column i-1. Here q is
/// the quotient of a_{i,j} by the pivot. `halfway` receives the matrix
/// after the first operation.
RawSyzygyMatrix reduction_move(const RawSyzygyMatrix& m, int i, int j, BiMatrix* halfway = nullptr);

struct MoveRecord {
  int i;
  int j;
  BiMatrix halfway;
  BiMatrix after;
};

struct CanonicalRun {
  IdealBasis basis;
  RawSyzygyMatrix raw;
  std::vector<MoveRecord> moves;
  ParamMatrix result;
};

/// Maximum number of moves before NON_TERMINATION_GUARD is raised.
int move_cap(const MonomialCell& cell);

/// The full pipeline: prepare_basis, extract_syzygies, then reduction
/// moves until the bound matrix holds. Blocks grow from the upper left;
/// in block k the last row is scanned right to left, then the last column
/// top to bottom, and the scan restarts after every move.
CanonicalRun canonicalize_traced(std::span<const BiPoly> gens,
                                 const std::optional<MonomialCell>& cell = std::nullopt);

ParamMatrix canonicalize(std::span<const BiPoly> gens,
                         const std::optional<MonomialCell>& cell = std::nullopt);

}  // namespace hbcell
