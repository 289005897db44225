#include "hbcell/canonical.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hbcell/groebner.hpp"

namespace hbcell {

namespace {

std::string list_monomials(std::span<const Monomial<2>> ms) {
  std::string out = "(";
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (k > 0) out += ", ";
    out += ms[k].to_string();
  }
  return out + ")";
}

std::vector<BiPoly> nonzero(std::span<const BiPoly> gens) {
  std::vector<BiPoly> out;
  for (const auto& g : gens) {
    if (!g.is_zero()) out.push_back(g);
  }
  if (out.empty()) throw Error(ErrorCode::zero_polynomial, "no nonzero generators");
  return out;
}

UniPoly univariate_entry(const BiPoly& p, int i, int j) {
  auto u = as_univariate_y(p);
  if (!u) {
    throw Error(ErrorCode::internal_reduction_failure,
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + p.to_string() +
                    " is not of the form X + A");
  }
  return *u;
}

void add_scaled_column(BiMatrix& h, int target, const BiPoly& q, int source) {
  for (int r = 1; r <= h.rows(); ++r) h(r, target) += q * h(r, source);
}

void add_scaled_row(BiMatrix& h, int target, const BiPoly& q, int source) {
  for (int c = 1; c <= h.cols(); ++c) h(target, c) += q * h(source, c);
}

}  // namespace

MonomialCell infer_cell(std::span<const BiPoly> gens) {
  const auto in = initial_ideal(buchberger<2>(nonzero(gens)));
  return cell_from_monomials(in);
}

IdealBasis prepare_basis(std::span<const BiPoly> gens, const MonomialCell& cell) {
  const std::vector<BiPoly> input = nonzero(gens);
  const FieldSpec field = input.front().field();
  const auto gb = buchberger<2>(input);
  const auto in = initial_ideal(gb);
  const auto wanted_list = cell.minimal_generators();
  const auto wanted = minimal_monomial_generators<2>(wanted_list);
  if (in != wanted) {
    throw Error(ErrorCode::wrong_initial_ideal,
                "in(I) = " + list_monomials(in) + ", expected " + list_monomials(wanted));
  }

  const int t = cell.t();
  std::vector<BiPoly> f;
  std::vector<BiPoly> sorted = input;
  std::stable_sort(sorted.begin(), sorted.end(), [](const BiPoly& a, const BiPoly& b) {
    return a.leading_monomial().exp[0] > b.leading_monomial().exp[0];
  });
  bool given_form = static_cast<int>(sorted.size()) == t + 1;
  for (int i = 0; given_form && i <= t; ++i) {
    given_form = sorted[static_cast<std::size_t>(i)].leading_monomial() == cell.generator(i);
  }
  if (given_form) {
    for (const auto& g : sorted) f.push_back(g.monic());
  } else {
    std::map<std::pair<std::uint32_t, std::uint32_t>, const BiPoly*> by_lead;
    for (const auto& g : gb.elements()) {
      by_lead[{g.leading_monomial().exp[0], g.leading_monomial().exp[1]}] = &g;
    }
    for (int i = 0; i <= t; ++i) {
      int k = i;
      while (k < t && cell.m(k + 1) == cell.m(i)) ++k;
      const auto& lead = cell.generator(k);
      const BiPoly& base = *by_lead.at({lead.exp[0], lead.exp[1]});
      f.push_back(base.mul_term(xy_monomial(static_cast<std::uint32_t>(k - i), 0), FieldElem::one(field)));
    }
  }

  const auto xt = xy_monomial(static_cast<std::uint32_t>(t), 0);
  for (int i = 1; i <= t; ++i) {
    BiPoly& fi = f[static_cast<std::size_t>(i)];
    while (true) {
      const BiPoly::Term* hit = nullptr;
      for (const auto& term : fi.terms()) {
        if (xt.divides(term.mono)) {
          hit = &term;
          break;
        }
      }
      if (hit == nullptr) break;
      const auto shift = xt.cofactor_in(hit->mono);
      const FieldElem c = hit->coeff;
      fi = fi.sub_mul_term(c, shift, f[0]);
    }
  }
  return {cell, std::move(f)};
}

UniMatrix RawSyzygyMatrix::a() const {
  const BiMatrix x = monomial_matrix(cell, h(1, 1).field());
  UniMatrix out(h.rows(), h.cols(), UniPoly(h(1, 1).field()));
  for (int i = 1; i <= h.rows(); ++i) {
    for (int j = 1; j <= h.cols(); ++j) out(i, j) = univariate_entry(h(i, j) - x(i, j), i, j);
  }
  return out;
}

RawSyzygyMatrix extract_syzygies(const IdealBasis& basis) {
  const MonomialCell& cell = basis.cell;
  check_leading_terms(cell, basis.f);
  const int t = cell.t();
  const FieldSpec field = basis.f.front().field();
  const IntMatrix grade = grade_matrix(cell);
  const FieldElem one = FieldElem::one(field);
  RawSyzygyMatrix out{cell, monomial_matrix(cell, field)};

  for (int i = 1; i <= t; ++i) {
    const auto shift = xy_monomial(0, static_cast<std::uint32_t>(cell.d(i)));
    BiPoly p = basis.f[static_cast<std::size_t>(i - 1)].mul_term(shift, one)
                   .sub_mul_term(one, xy_monomial(1, 0), basis.f[static_cast<std::size_t>(i)]);
    std::vector<std::vector<UniPoly::Term>> quotients(static_cast<std::size_t>(t) + 1);
    while (!p.is_zero()) {
      const auto& lead = p.leading_term();
      const int a = static_cast<int>(lead.mono.exp[0]);
      const int b = static_cast<int>(lead.mono.exp[1]);
      if (a > t || b < cell.m(t - a)) {
        throw Error(ErrorCode::internal_reduction_failure,
                    "S-polynomial of column " + std::to_string(i) + " leaves the term " +
                        lead.mono.to_string());
      }
      const int k = t - a;
      const auto& fk = basis.f[static_cast<std::size_t>(k)];
      const FieldElem c = lead.coeff / fk.leading_coeff();
      const auto e = static_cast<std::uint32_t>(b - cell.m(k));
      quotients[static_cast<std::size_t>(k)].push_back({y_power(e), c});
      p = p.sub_mul_term(c, xy_monomial(0, e), fk);
    }
    for (int k = 0; k <= t; ++k) {
      const UniPoly q = UniPoly::from_terms(field, std::move(quotients[static_cast<std::size_t>(k)]));
      if (q.degree() > grade(k + 1, i)) {
        throw Error(ErrorCode::internal_reduction_failure,
                    "quotient at (" + std::to_string(k + 1) + "," + std::to_string(i) + ") has degree " +
                        std::to_string(q.degree()) + " above " + std::to_string(grade(k + 1, i)));
      }
      out.h(k + 1, i) -= embed_y(q);
    }
  }
  return out;
}

RawSyzygyMatrix reduction_move(const RawSyzygyMatrix& m, int i, int j, BiMatrix* halfway) {
  const MonomialCell& cell = m.cell;
  const int t = cell.t();
  if (i < 1 || i > t + 1 || j < 1 || j > t || i == j) {
    throw Error(ErrorCode::move_not_applicable,
                "no move at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  const int p = i < j ? i : j;
  const int need = cell.d(p);
  const BiPoly x_entry = monomial_matrix(cell, m.h(1, 1).field())(i, j);
  const UniPoly a = univariate_entry(m.h(i, j) - x_entry, i, j);
  const UniPoly pivot = univariate_entry(m.h(p, p), p, p);
  if (a.degree() < need || pivot.degree() != need) {
    throw Error(ErrorCode::move_not_applicable,
                "Red(" + std::to_string(i) + "," + std::to_string(j) + "): degree " +
                    std::to_string(a.is_zero() ? -1 : a.degree()) + " below " + std::to_string(need));
  }
  const BiPoly q = embed_y(divide_univariate(a, pivot).quotient);
  RawSyzygyMatrix out = m;
  if (i < j) {
    add_scaled_column(out.h, j, -q, i);
    if (halfway != nullptr) *halfway = out.h;
    add_scaled_row(out.h, i + 1, q, j + 1);
  } else {
    add_scaled_row(out.h, i, -q, j);
    if (halfway != nullptr) *halfway = out.h;
    if (j >= 2) add_scaled_column(out.h, j - 1, q, i - 1);
  }
  return out;
}

int move_cap(const MonomialCell& cell) {
  const IntMatrix grade = grade_matrix(cell);
  int top = 0;
  for (int i = 1; i <= grade.rows(); ++i) {
    for (int j = 1; j <= grade.cols(); ++j) top = std::max(top, grade(i, j));
  }
  return 10 * (cell.t() + 1) * cell.t() * (top + 1);
}

CanonicalRun canonicalize_traced(std::span<const BiPoly> gens, const std::optional<MonomialCell>& cell) {
  const MonomialCell target = cell ? *cell : infer_cell(gens);
  IdealBasis basis = prepare_basis(gens, target);
  RawSyzygyMatrix raw = extract_syzygies(basis);
  const FieldSpec field = basis.f.front().field();
  const IntMatrix bounds = bound_matrix(target);
  const IntMatrix grade = grade_matrix(target);
  const int t = target.t();
  const int cap = move_cap(target);

  auto violation = [&](const UniMatrix& a) -> std::optional<std::pair<int, int>> {
    for (int k = 1; k <= t; ++k) {
      for (int j = k; j >= 1; --j) {
        if (a(k + 1, j).degree() > bounds(k + 1, j)) return std::pair{k + 1, j};
      }
      for (int i = 1; i <= k; ++i) {
        if (a(i, k).degree() > bounds(i, k)) return std::pair{i, k};
      }
    }
    return std::nullopt;
  };

  std::vector<MoveRecord> moves;
  RawSyzygyMatrix current = raw;
  UniMatrix a = current.a();
  while (auto slot = violation(a)) {
    if (static_cast<int>(moves.size()) >= cap) {
      throw Error(ErrorCode::non_termination_guard,
                  "more than " + std::to_string(cap) + " reduction moves");
    }
    MoveRecord record{slot->first, slot->second, {}, {}};
    current = reduction_move(current, slot->first, slot->second, &record.halfway);
    record.after = current.h;
    moves.push_back(std::move(record));
    a = current.a();
    if (auto slots = bound_violations(grade, a); !slots.empty()) {
      throw Error(ErrorCode::structure_violation,
                  "grade bound broken at (" + std::to_string(slots.front().row) + "," +
                      std::to_string(slots.front().col) + ") after Red(" +
                      std::to_string(moves.back().i) + "," + std::to_string(moves.back().j) + ")");
    }
  }
  ParamMatrix result = check_membership(target, field, std::move(a));
  return {std::move(basis), std::move(raw), std::move(moves), std::move(result)};
}

ParamMatrix canonicalize(std::span<const BiPoly> gens, const std::optional<MonomialCell>& cell) {
  return canonicalize_traced(gens, cell).result;
}

}  // namespace hbcell
