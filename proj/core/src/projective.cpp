#include "hbcell/projective.hpp"

#include "hbcell/groebner.hpp"

namespace hbcell {

namespace {

void require_homogeneous(std::span<const TriPoly> polys) {
  for (const auto& p : polys) {
    if (!p.is_homogeneous()) {
      throw Error(ErrorCode::not_homogeneous, p.to_string() + " is not homogeneous");
    }
  }
}

void require_lex(const MonomialCell& cell) {
  if (!cell.lex_segment()) throw Error(ErrorCode::not_lexsegment, "projective lift needs a lex-segment cell");
}

}  // namespace

TriMatrix homogenize_matrix(const ParamMatrix& a) {
  const IntMatrix u = degree_matrix(a.cell());
  TriMatrix out(a.rows(), a.cols(), TriPoly(a.field()));
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) {
      const UniPoly& entry = a(i, j);
      if (entry.is_zero()) continue;
      const auto pad = xyz_monomial(0, 0, static_cast<std::uint32_t>(u(i, j) - entry.degree()));
      out(i, j) = homogenize(entry).mul_term(pad, FieldElem::one(a.field()));
    }
  }
  return out;
}

TriMatrix hilbert_burch_matrix_hom(const ParamMatrix& a) {
  const BiMatrix x = monomial_matrix(a.cell(), a.field());
  TriMatrix out = homogenize_matrix(a);
  for (int i = 1; i <= out.rows(); ++i) {
    for (int j = 1; j <= out.cols(); ++j) out(i, j) += embed_xy(x(i, j));
  }
  return out;
}

HomIdealBasis psi_bar(const ParamMatrix& a) {
  require_lex(a.cell());
  const IdealBasis basis = psi(a);
  HomIdealBasis out{a.cell(), {}};
  for (const auto& f : basis.f) out.F.push_back(homogenize(f));
  return out;
}

HomIdealBasis psi_bar_by_minors(const ParamMatrix& a) {
  require_lex(a.cell());
  return {a.cell(), signed_maximal_minors(hilbert_burch_matrix_hom(a))};
}

bool z_regular(std::span<const TriPoly> basis) {
  require_homogeneous(basis);
  const auto in = initial_ideal(buchberger<3>(basis));
  for (const auto& m : in) {
    if (m.exp[2] != 0) return false;
  }
  return true;
}

std::vector<TriPoly> ideal_homogenize(std::span<const BiPoly> gb) {
  if (!is_groebner_basis<2>(gb)) throw Error(ErrorCode::not_groebner, "input is not a Groebner basis");
  std::vector<TriPoly> out;
  for (const auto& f : gb) out.push_back(homogenize(f));
  return out;
}

std::vector<BiPoly> ideal_dehomogenize(std::span<const TriPoly> gb) {
  require_homogeneous(gb);
  if (!is_groebner_basis<3>(gb)) throw Error(ErrorCode::not_groebner, "input is not a Groebner basis");
  std::vector<BiPoly> out;
  for (const auto& F : gb) out.push_back(dehomogenize(F));
  return out;
}

}  // namespace hbcell
