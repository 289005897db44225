#include "hbcell/betti.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hbcell {

namespace {

void require_lex(const MonomialCell& cell) {
  if (!cell.lex_segment()) throw Error(ErrorCode::not_lexsegment, "Betti strata need a lex-segment cell");
}

std::set<int> all_degrees(const ResolutionDegrees& deg) {
  std::set<int> out(deg.p.begin(), deg.p.end());
  out.insert(deg.q.begin(), deg.q.end());
  return out;
}

}  // namespace

ResolutionDegrees resolution_degrees(const MonomialCell& cell) {
  const int t = cell.t();
  ResolutionDegrees out;
  for (int i = 0; i <= t; ++i) out.p.push_back(t - i + cell.m(i));
  for (int c = 1; c <= t; ++c) out.q.push_back(t - c + cell.m(c) + 1);
  return out;
}

IndexSets index_sets(const MonomialCell& cell, int j) {
  require_lex(cell);
  const auto deg = resolution_degrees(cell);
  IndexSets out;
  for (std::size_t k = 0; k < deg.p.size(); ++k) {
    if (deg.p[k] == j) out.w.push_back(static_cast<int>(k) + 1);
  }
  for (std::size_t k = 0; k < deg.q.size(); ++k) {
    if (deg.q[k] == j) out.v.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

ScalarMatrix block_matrix(const ParamMatrix& a, int j) {
  const auto sets = index_sets(a.cell(), j);
  const IntMatrix b = bound_matrix(a.cell());
  const auto rows = static_cast<int>(sets.w.size());
  const auto cols = static_cast<int>(sets.v.size());
  ScalarMatrix out(rows, cols, FieldElem::zero(a.field()));
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      const int i = sets.w[static_cast<std::size_t>(r - 1)];
      const int k = sets.v[static_cast<std::size_t>(c - 1)];
      if (b(i, k) != 0) {
        throw Error(ErrorCode::structure_violation,
                    "slot (" + std::to_string(i) + "," + std::to_string(k) + ") of M_" + std::to_string(j) +
                        " has bound " + std::to_string(b(i, k)) + ", expected 0");
      }
      out(r, c) = a(i, k).coeff(y_power(0));
    }
  }
  return out;
}

int rank(const ScalarMatrix& m) {
  ScalarMatrix w = m;
  int r = 0;
  for (int c = 1; c <= w.cols() && r < w.rows(); ++c) {
    int pivot = 0;
    for (int i = r + 1; i <= w.rows(); ++i) {
      if (!w(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == 0) continue;
    ++r;
    for (int k = 1; k <= w.cols(); ++k) std::swap(w(r, k), w(pivot, k));
    const FieldElem inv = w(r, c).inv();
    for (int i = r + 1; i <= w.rows(); ++i) {
      if (w(i, c).is_zero()) continue;
      const FieldElem factor = w(i, c) * inv;
      for (int k = c; k <= w.cols(); ++k) w(i, k) -= factor * w(r, k);
    }
  }
  return r;
}

BettiTable betti_numbers(const ParamMatrix& a) {
  const MonomialCell& cell = a.cell();
  require_lex(cell);
  if (!char_ok(a.field(), hilbert_function(cell))) {
    throw Error(ErrorCode::char_too_small,
                a.field().name() + " does not exceed the top degree of the Hilbert function");
  }
  BettiTable out;
  for (int j : all_degrees(resolution_degrees(cell))) {
    const auto sets = index_sets(cell, j);
    const int rk = rank(block_matrix(a, j));
    const int w = static_cast<int>(sets.w.size());
    const int v = static_cast<int>(sets.v.size());
    if (w > 0) out.lex_beta0[j] = w;
    if (v > 0) out.lex_beta1[j] = v;
    if (w - rk > 0) out.beta0[j] = w - rk;
    if (v - rk > 0) out.beta1[j] = v - rk;
  }
  return out;
}

int strata_codim(const MonomialCell& cell, int j, int u) {
  const auto sets = index_sets(cell, j);
  const int b0 = static_cast<int>(sets.w.size());
  const int b1 = static_cast<int>(sets.v.size());
  if (u < b0 - b1 || u > b0) {
    throw Error(ErrorCode::empty_stratum, "beta_0," + std::to_string(j) + " = " + std::to_string(u) +
                                              " lies outside [" + std::to_string(b0 - b1) + ", " +
                                              std::to_string(b0) + "]");
  }
  return (b1 - b0 + u) * u;
}

int strata_codim_total(const MonomialCell& cell, const std::map<int, int>& beta0) {
  const auto degrees = all_degrees(resolution_degrees(cell));
  for (const auto& [j, u] : beta0) {
    if (!degrees.contains(j) && u != 0) {
      throw Error(ErrorCode::empty_stratum, "no generator of degree " + std::to_string(j));
    }
  }
  int total = 0;
  int by_product = 0;
  for (int j : degrees) {
    const auto sets = index_sets(cell, j);
    const int b0 = static_cast<int>(sets.w.size());
    const int b1 = static_cast<int>(sets.v.size());
    const auto it = beta0.find(j);
    const int u = it != beta0.end() ? it->second : std::max(0, b0 - b1);
    total += strata_codim(cell, j, u);
    by_product += (b1 - b0 + u) * u;
  }
  if (total != by_product) {
    throw Error(ErrorCode::structure_violation, "codimension sum disagrees with sum of beta products");
  }
  return total;
}

}  // namespace hbcell
