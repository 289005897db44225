#include "hbcell/cell.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace hbcell {

namespace {

std::string render(const std::vector<int>& m) {
  std::string out = "(";
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(m[k]);
  }
  return out + ")";
}

void require_lex(const MonomialCell& cell, const char* what) {
  if (!cell.lex_segment()) {
    throw Error(ErrorCode::not_lexsegment,
                std::string(what) + " requires a lex-segment cell, got m = " +
                    render(std::vector<int>(cell.m_vector().begin(), cell.m_vector().end())));
  }
}

int h_at(std::span<const int> h, int i) {
  if (i < 0 || i >= static_cast<int>(h.size())) return 0;
  return h[static_cast<std::size_t>(i)];
}

}  // namespace

MonomialCell::MonomialCell(std::vector<int> m) : m_(std::move(m)) {
  if (m_.size() < 2) throw Error(ErrorCode::bad_m_vector, "need t >= 1, got " + render(m_));
  if (m_[0] != 0) throw Error(ErrorCode::bad_m_vector, "m_0 must be 0 in " + render(m_));
  if (m_[1] < 1) throw Error(ErrorCode::bad_m_vector, "m_1 must be positive in " + render(m_));
  for (std::size_t i = 1; i < m_.size(); ++i) {
    if (m_[i] < m_[i - 1]) {
      throw Error(ErrorCode::bad_m_vector, "m must be non-decreasing: " + render(m_));
    }
  }
}

std::vector<int> MonomialCell::d_vector() const {
  std::vector<int> out;
  for (int i = 1; i <= t(); ++i) out.push_back(d(i));
  return out;
}

bool MonomialCell::lex_segment() const noexcept {
  for (std::size_t i = 1; i < m_.size(); ++i) {
    if (m_[i] <= m_[i - 1]) return false;
  }
  return true;
}

int MonomialCell::colength() const noexcept {
  int n = 0;
  for (int v : m_) n += v;
  return n;
}

Monomial<2> MonomialCell::generator(int i) const {
  return xy_monomial(static_cast<std::uint32_t>(t() - i), static_cast<std::uint32_t>(m(i)));
}

bool MonomialCell::contains(const Monomial<2>& mono) const {
  const int a = static_cast<int>(mono.exp[0]);
  if (a >= t()) return true;
  return static_cast<int>(mono.exp[1]) >= m(t() - a);
}

std::vector<Monomial<2>> MonomialCell::minimal_generators() const {
  std::vector<Monomial<2>> out;
  for (int i = 0; i <= t(); ++i) {
    if (i == t() || d(i + 1) > 0) out.push_back(generator(i));
  }
  return out;
}

MonomialCell make_cell(std::vector<int> m) { return MonomialCell(std::move(m)); }

MonomialCell cell_from_monomials(std::span<const Monomial<2>> gens) {
  constexpr int inf = std::numeric_limits<int>::max();
  int t = inf;
  for (const auto& g : gens) {
    if (g.exp[1] == 0) t = std::min(t, static_cast<int>(g.exp[0]));
  }
  if (t == inf) throw Error(ErrorCode::wrong_initial_ideal, "no pure power of x; ideal is not zero-dimensional");
  std::vector<int> m(static_cast<std::size_t>(t) + 1, inf);
  for (int i = 0; i <= t; ++i) {
    for (const auto& g : gens) {
      if (static_cast<int>(g.exp[0]) <= t - i) {
        m[static_cast<std::size_t>(i)] = std::min(m[static_cast<std::size_t>(i)], static_cast<int>(g.exp[1]));
      }
    }
    if (m[static_cast<std::size_t>(i)] == inf) {
      throw Error(ErrorCode::wrong_initial_ideal, "no pure power of y; ideal is not zero-dimensional");
    }
  }
  if (t == 0) throw Error(ErrorCode::wrong_initial_ideal, "the ideal is the whole ring");
  return MonomialCell(std::move(m));
}

std::vector<int> hilbert_function(const MonomialCell& cell) {
  const int t = cell.t();
  int top = 0;
  for (int a = 0; a < t; ++a) top = std::max(top, a + cell.m(t - a) - 1);
  std::vector<int> h(static_cast<std::size_t>(top) + 1, 0);
  // x^a y^b lies outside I0 iff a < t and b < m_{t-a}.
  for (int a = 0; a < t; ++a) {
    for (int b = 0; b < cell.m(t - a); ++b) ++h[static_cast<std::size_t>(a + b)];
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

IntMatrix degree_matrix(const MonomialCell& cell) {
  const int t = cell.t();
  IntMatrix u(t + 1, t);
  for (int i = 1; i <= t + 1; ++i) {
    for (int j = 1; j <= t; ++j) u(i, j) = i - j + cell.m(j) - cell.m(i - 1);
  }
  return u;
}

IntMatrix bound_matrix(const MonomialCell& cell) {
  const int t = cell.t();
  const IntMatrix u = degree_matrix(cell);
  IntMatrix b(t + 1, t);
  for (int i = 1; i <= t + 1; ++i) {
    for (int j = 1; j <= t; ++j) {
      b(i, j) = i <= j ? std::min(u(i, j) - 1, cell.d(i) - 1) : std::min(u(i, j), cell.d(j) - 1);
    }
  }
  return b;
}

IntMatrix grade_matrix(const MonomialCell& cell) {
  IntMatrix g = degree_matrix(cell);
  for (int i = 1; i <= g.rows(); ++i) {
    for (int j = i; j <= g.cols(); ++j) g(i, j) -= 1;
  }
  return g;
}

int parameter_count(const MonomialCell& cell) {
  const IntMatrix b = bound_matrix(cell);
  int n = 0;
  for (int i = 1; i <= b.rows(); ++i) {
    for (int j = 1; j <= b.cols(); ++j) {
      if (b(i, j) >= 0) n += b(i, j) + 1;
    }
  }
  return n;
}

int dimension_formula(std::span<const int> h) {
  int colength = 0;
  for (int v : h) colength += v;
  int sum = 0;
  for (int i = 1; i <= static_cast<int>(h.size()) + 1; ++i) {
    sum += h_at(h, i) * (h_at(h, i - 1) - h_at(h, i - 2));
  }
  return colength + 1 + sum;
}

int dimension_formula_compact(std::span<const int> h) {
  int sum = 0;
  for (int i = 0; i <= static_cast<int>(h.size()) + 1; ++i) {
    sum += h_at(h, i) * (h_at(h, i - 1) - h_at(h, i - 2) + 1);
  }
  return 1 + sum;
}

int dimension(const MonomialCell& cell) {
  require_lex(cell, "dimension");
  const int counted = parameter_count(cell);
  const auto h = hilbert_function(cell);
  const int by_formula = dimension_formula(h);
  const int by_compact = dimension_formula_compact(h);
  if (counted != by_formula || counted != by_compact) {
    throw Error(ErrorCode::structure_violation,
                "parameter count " + std::to_string(counted) + " disagrees with closed forms " +
                    std::to_string(by_formula) + "/" + std::to_string(by_compact));
  }
  return counted;
}

DimensionBounds dimension_bounds(const MonomialCell& cell) {
  require_lex(cell, "dimension_bounds");
  const int n = cell.colength();
  if (n < 2) {
    throw Error(ErrorCode::colength_too_small, "bounds need colength >= 2, got " + std::to_string(n));
  }
  return {std::max(n + cell.t(), n + 2), 2 * n};
}

SpecialIndices special_indices(const MonomialCell& cell) {
  SpecialIndices out;
  for (int i = 1; i <= cell.t(); ++i) {
    if (cell.d(i) >= 3) out.three_or_more.insert(i);
    if (cell.d(i) >= 2) out.two_or_more.insert(i);
  }
  return out;
}

std::map<int, int> lex_betti(const MonomialCell& cell) {
  require_lex(cell, "lex_betti");
  std::map<int, int> beta;
  for (int i = 0; i <= cell.t(); ++i) ++beta[cell.generator(i).degree()];
  return beta;
}

int below_diagonal_linear_slots(const MonomialCell& cell) {
  const IntMatrix b = bound_matrix(cell);
  int n = 0;
  for (int i = 2; i <= b.rows(); ++i) {
    for (int j = 1; j < i && j <= b.cols(); ++j) n += b(i, j) == 1 ? 1 : 0;
  }
  return n;
}

int below_diagonal_zero_slots(const MonomialCell& cell) {
  const IntMatrix b = bound_matrix(cell);
  int n = 0;
  for (int i = 2; i <= b.rows(); ++i) {
    for (int j = 1; j < i && j <= b.cols(); ++j) n += b(i, j) < 0 ? 1 : 0;
  }
  return n;
}

std::vector<MonomialCell> enumerate_lex_cells(int max_colength) {
  std::vector<MonomialCell> out;
  std::vector<int> m{0};
  std::function<void(int)> extend = [&](int budget) {
    for (int next = m.back() + 1; next <= budget; ++next) {
      m.push_back(next);
      out.emplace_back(m);
      extend(budget - next);
      m.pop_back();
    }
  };
  extend(max_colength);
  std::sort(out.begin(), out.end(), [](const MonomialCell& a, const MonomialCell& b) {
    return std::lexicographical_compare(a.m_vector().begin(), a.m_vector().end(),
                                        b.m_vector().begin(), b.m_vector().end());
  });
  return out;
}

}  // namespace hbcell
