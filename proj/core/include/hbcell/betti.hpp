#pragma once

#include <map>
#include <vector>

#include "hbcell/hilburch.hpp"

namespace hbcell {

/// Degrees in the resolution 0 -> (+) S(-q_c) -> (+) S(-p_r) -> J -> 0.
/// p[r-1] is the degree of row r, carrying f_{r-1}: t - (r-1) + m_{r-1}.
/// q[c-1] is the degree of column c: deg f_c + 1.
struct ResolutionDegrees {
  std::vector<int> p;
  std::vector<int> q;
};

ResolutionDegrees resolution_degrees(const MonomialCell& cell);

/// w_j = rows of degree j, v_j = columns of degree j (1-based).
struct IndexSets {
  std::vector<int> w;
  std::vector<int> v;
};

IndexSets index_sets(const MonomialCell& cell, int j);

using ScalarMatrix = Grid<FieldElem>;

/// M_j: the constant entries a_{r,c} for r in w_j, c in v_j. Each selected
/// slot must have bound 0 (STRUCTURE_VIOLATION otherwise).
ScalarMatrix block_matrix(const ParamMatrix& a, int j);

/// Rank by exact Gaussian elimination.
int rank(const ScalarMatrix& m);

struct BettiTable {
  std::map<int, int> beta0;
  std::map<int, int> beta1;
  std::map<int, int> lex_beta0;
  std::map<int, int> lex_beta1;
};

/// beta_{0,j} = #w_j - rank M_j and beta_{1,j} = #v_j - rank M_j, zero
/// counts omitted. Needs a lex-segment cell and char_ok.
BettiTable betti_numbers(const ParamMatrix& a);

/// Codimension (beta1_j(Lex) - beta0_j(Lex) + u) * u of the locus with
/// beta_{0,j} >= u; EMPTY_STRATUM outside beta0 - beta1 <= u <= beta0.
int strata_codim(const MonomialCell& cell, int j, int u);

/// Sum of strata_codim over all degrees, with u_j taken from `beta0`
/// where given and max(0, beta0_j(Lex) - beta1_j(Lex)) elsewhere.
/// Checked against sum_j beta1_j(J) beta0_j(J).
int strata_codim_total(const MonomialCell& cell, const std::map<int, int>& beta0);

}  // namespace hbcell
