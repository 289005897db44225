#include "hbcell/hilburch.hpp"

#include <bit>
#include <random>
#include <string>
#include <unordered_map>

#include "hbcell/groebner.hpp"

namespace hbcell {

namespace {

template <std::size_t N>
class MinorTable {
 public:
  explicit MinorTable(const Grid<Polynomial<N>>& m) : m_(m), field_(m(1, 1).field()) {}

  /// det of the rows in `rows` (bit r-1 for row r) against columns 1..popcount.
  const Polynomial<N>& minor(std::uint64_t rows) {
    if (auto it = memo_.find(rows); it != memo_.end()) return it->second;
    const int k = std::popcount(rows);
    Polynomial<N> acc(field_);
    if (k == 0) {
      acc = Polynomial<N>::constant(field_, 1);
    } else {
      int pos = 0;
      for (int r = 1; r <= m_.rows(); ++r) {
        const std::uint64_t bit = std::uint64_t{1} << (r - 1);
        if ((rows & bit) == 0) continue;
        ++pos;
        const auto& entry = m_(r, k);
        if (entry.is_zero()) continue;
        const Polynomial<N> sub = minor(rows & ~bit);
        if (sub.is_zero()) continue;
        if ((pos + k) % 2 == 0) {
          acc += entry * sub;
        } else {
          acc -= entry * sub;
        }
      }
    }
    return memo_.emplace(rows, std::move(acc)).first->second;
  }

 private:
  const Grid<Polynomial<N>>& m_;
  FieldSpec field_;
  std::unordered_map<std::uint64_t, Polynomial<N>> memo_;
};

template <std::size_t N>
void check_expansion_shape(const Grid<Polynomial<N>>& m, int extra_rows) {
  if (m.cols() < 1 || m.rows() != m.cols() + extra_rows || m.rows() > 63) {
    throw Error(ErrorCode::shape_mismatch, "unsupported matrix shape " + std::to_string(m.rows()) +
                                               "x" + std::to_string(m.cols()));
  }
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % n;
}

}  // namespace

std::vector<SlotViolation> bound_violations(const IntMatrix& bounds, const UniMatrix& a) {
  std::vector<SlotViolation> out;
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) {
      const int deg = a(i, j).degree();
      if (deg > bounds(i, j)) out.push_back({i, j, deg, bounds(i, j)});
    }
  }
  return out;
}

ParamMatrix check_membership(const MonomialCell& cell, const FieldSpec& field, UniMatrix a) {
  const int t = cell.t();
  if (a.rows() != t + 1 || a.cols() != t) {
    throw Error(ErrorCode::shape_mismatch, "parameter matrix must be " + std::to_string(t + 1) +
                                               "x" + std::to_string(t) + ", got " +
                                               std::to_string(a.rows()) + "x" +
                                               std::to_string(a.cols()));
  }
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j) {
      if (a(i, j).field() != field) {
        throw Error(ErrorCode::field_mismatch, "entry (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") is over " +
                                                   a(i, j).field().name());
      }
    }
  }
  auto violations = bound_violations(bound_matrix(cell), a);
  if (!violations.empty()) throw BoundViolationError(std::move(violations));
  return ParamMatrix(cell, field, std::move(a));
}

ParamMatrix zero_matrix(const MonomialCell& cell, const FieldSpec& field) {
  return check_membership(cell, field, UniMatrix(cell.t() + 1, cell.t(), UniPoly(field)));
}

BiMatrix monomial_matrix(const MonomialCell& cell, const FieldSpec& field) {
  const int t = cell.t();
  BiMatrix x(t + 1, t, BiPoly(field));
  for (int i = 1; i <= t; ++i) {
    x(i, i) = BiPoly::monomial(field, xy_monomial(0, static_cast<std::uint32_t>(cell.d(i))));
    x(i + 1, i) = -BiPoly::monomial(field, xy_monomial(1, 0));
  }
  return x;
}

BiMatrix hilbert_burch_matrix(const ParamMatrix& a) {
  BiMatrix m = monomial_matrix(a.cell(), a.field());
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) m(i, j) += embed_y(a(i, j));
  }
  return m;
}

template <std::size_t N>
Polynomial<N> determinant(const Grid<Polynomial<N>>& m) {
  check_expansion_shape(m, 0);
  MinorTable<N> table(m);
  return table.minor((std::uint64_t{1} << m.rows()) - 1);
}

template <std::size_t N>
std::vector<Polynomial<N>> signed_maximal_minors(const Grid<Polynomial<N>>& m) {
  check_expansion_shape(m, 1);
  const int n = m.cols();
  const std::uint64_t all = (std::uint64_t{1} << m.rows()) - 1;
  MinorTable<N> table(m);
  std::vector<Polynomial<N>> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Polynomial<N>& minor = table.minor(all & ~(std::uint64_t{1} << i));
    out.push_back((n - i) % 2 == 0 ? minor : -minor);
  }
  return out;
}

template <std::size_t N>
std::vector<Polynomial<N>> syzygy_residuals(std::span<const Polynomial<N>> f,
                                            const Grid<Polynomial<N>>& m) {
  if (static_cast<int>(f.size()) != m.rows()) {
    throw Error(ErrorCode::shape_mismatch, "row vector length does not match the matrix");
  }
  std::vector<Polynomial<N>> out;
  for (int c = 1; c <= m.cols(); ++c) {
    Polynomial<N> acc(m(1, c).field());
    for (int r = 1; r <= m.rows(); ++r) acc += f[static_cast<std::size_t>(r - 1)] * m(r, c);
    out.push_back(std::move(acc));
  }
  return out;
}

IdealBasis psi(const ParamMatrix& a) {
  auto f = signed_maximal_minors(hilbert_burch_matrix(a));
  const MonomialCell& cell = a.cell();
  for (int i = 0; i <= cell.t(); ++i) {
    const auto& fi = f[static_cast<std::size_t>(i)];
    if (fi.is_zero() || fi.leading_monomial() != cell.generator(i) || !fi.leading_coeff().is_one()) {
      throw Error(ErrorCode::structure_violation,
                  "minor f_" + std::to_string(i) + " = " + fi.to_string() + " is not of the expected form");
    }
  }
  return {cell, std::move(f)};
}

void check_leading_terms(const MonomialCell& cell, std::span<const BiPoly> f) {
  if (static_cast<int>(f.size()) != cell.t() + 1) {
    throw Error(ErrorCode::leading_term_mismatch, "expected " + std::to_string(cell.t() + 1) +
                                                      " generators, got " + std::to_string(f.size()));
  }
  for (int i = 0; i <= cell.t(); ++i) {
    const auto& fi = f[static_cast<std::size_t>(i)];
    if (fi.is_zero() || fi.leading_monomial() != cell.generator(i)) {
      throw Error(ErrorCode::leading_term_mismatch,
                  "in(f_" + std::to_string(i) + ") must be " + cell.generator(i).to_string() +
                      ", got " + (fi.is_zero() ? std::string("0") : fi.leading_monomial().to_string()));
    }
  }
}

bool verify_groebner_property(const IdealBasis& basis) {
  const MonomialCell& cell = basis.cell;
  check_leading_terms(cell, basis.f);
  std::vector<BiPoly> f;
  for (const auto& g : basis.f) f.push_back(g.monic());
  const FieldSpec field = f.front().field();
  const auto x = xy_monomial(1, 0);
  const FieldElem one = FieldElem::one(field);
  for (int i = 1; i <= cell.t(); ++i) {
    const auto shift = xy_monomial(0, static_cast<std::uint32_t>(cell.d(i)));
    const BiPoly s = f[static_cast<std::size_t>(i - 1)].mul_term(shift, one)
                         .sub_mul_term(one, x, f[static_cast<std::size_t>(i)]);
    if (!reduce<2>(s, f).is_zero()) return false;
  }
  return true;
}

std::vector<FieldElem> coordinates(const ParamMatrix& a) {
  const IntMatrix b = bound_matrix(a.cell());
  std::vector<FieldElem> out;
  for (int i = 1; i <= b.rows(); ++i) {
    for (int j = 1; j <= b.cols(); ++j) {
      for (int e = 0; e <= b(i, j); ++e) out.push_back(a(i, j).coeff(y_power(static_cast<std::uint32_t>(e))));
    }
  }
  return out;
}

ParamMatrix from_coordinates(const MonomialCell& cell, const FieldSpec& field,
                             std::span<const FieldElem> coords) {
  const IntMatrix b = bound_matrix(cell);
  if (static_cast<int>(coords.size()) != parameter_count(cell)) {
    throw Error(ErrorCode::shape_mismatch, "expected " + std::to_string(parameter_count(cell)) +
                                               " coordinates, got " + std::to_string(coords.size()));
  }
  UniMatrix a(b.rows(), b.cols(), UniPoly(field));
  std::size_t next = 0;
  for (int i = 1; i <= b.rows(); ++i) {
    for (int j = 1; j <= b.cols(); ++j) {
      std::vector<UniPoly::Term> terms;
      for (int e = 0; e <= b(i, j); ++e) {
        terms.push_back({y_power(static_cast<std::uint32_t>(e)), coords[next++]});
      }
      a(i, j) = UniPoly::from_terms(field, std::move(terms));
    }
  }
  return check_membership(cell, field, std::move(a));
}

std::vector<FieldElem> sample_coordinates(const MonomialCell& cell, const FieldSpec& field,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int count = parameter_count(cell);
  std::vector<FieldElem> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    if (field.is_rationals()) {
      out.push_back(FieldElem::from_int(field, static_cast<long long>(uniform_below(rng, 19)) - 9));
    } else {
      out.push_back(FieldElem::from_int(field, static_cast<long long>(uniform_below(rng, field.prime()))));
    }
  }
  return out;
}

ParamMatrix sample(const MonomialCell& cell, const FieldSpec& field, std::uint64_t seed) {
  return from_coordinates(cell, field, sample_coordinates(cell, field, seed));
}

template Polynomial<1> determinant<1>(const Grid<Polynomial<1>>&);
template Polynomial<2> determinant<2>(const Grid<Polynomial<2>>&);
template Polynomial<3> determinant<3>(const Grid<Polynomial<3>>&);
template std::vector<Polynomial<2>> signed_maximal_minors<2>(const Grid<Polynomial<2>>&);
template std::vector<Polynomial<3>> signed_maximal_minors<3>(const Grid<Polynomial<3>>&);
template std::vector<Polynomial<2>> syzygy_residuals<2>(std::span<const Polynomial<2>>,
                                                        const Grid<Polynomial<2>>&);
template std::vector<Polynomial<3>> syzygy_residuals<3>(std::span<const Polynomial<3>>,
                                                        const Grid<Polynomial<3>>&);

}  // namespace hbcell
