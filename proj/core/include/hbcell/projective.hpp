#pragma once

#include <span>
#include <vector>

#include "hbcell/hilburch.hpp"

namespace hbcell {

/// A^hom: entry (i,j) is z^{u_{i,j} - deg a_{i,j}} a_{i,j}^hom, zero slots stay zero.
TriMatrix homogenize_matrix(const ParamMatrix& a);

/// X + A^hom over K[x,y,z].
TriMatrix hilbert_burch_matrix_hom(const ParamMatrix& a);

struct HomIdealBasis {
  MonomialCell cell;
  std::vector<TriPoly> F;

  friend bool operator==(const HomIdealBasis&, const HomIdealBasis&) = default;
};

/// F_i = (f_i)^hom for f = psi(A). Lex-segment cells only.
HomIdealBasis psi_bar(const ParamMatrix& a);

/// The signed maximal minors of X + A^hom, computed directly.
HomIdealBasis psi_bar_by_minors(const ParamMatrix& a);

/// True iff no minimal generator of in(<basis>) is divisible by z.
bool z_regular(std::span<const TriPoly> basis);

/// {f^hom} for a DRL Groebner basis {f}; NOT_GROEBNER otherwise.
std::vector<TriPoly> ideal_homogenize(std::span<const BiPoly> gb);

/// {F(x,y,1)} for a homogeneous DRL Groebner basis {F}; NOT_GROEBNER or
/// NOT_HOMOGENEOUS otherwise.
std::vector<BiPoly> ideal_dehomogenize(std::span<const TriPoly> gb);

}  // namespace hbcell
