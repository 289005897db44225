#include "hbcell/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hbcell {

namespace {

template <std::size_t N>
const Polynomial<N>* first_reducer(const Monomial<N>& m, std::span<const Polynomial<N>> divisors,
                                   std::size_t& index) {
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    if (divisors[k].leading_monomial().divides(m)) {
      index = k;
      return &divisors[k];
    }
  }
  return nullptr;
}

template <std::size_t N>
void check_divisors(std::span<const Polynomial<N>> divisors) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw Error(ErrorCode::division_by_zero, "zero divisor in division");
  }
}

}  // namespace

template <std::size_t N>
DivisionResult<N> divide(const Polynomial<N>& f, std::span<const Polynomial<N>> divisors) {
  check_divisors(divisors);
  const FieldSpec& field = f.field();
  DivisionResult<N> out{std::vector<Polynomial<N>>(divisors.size(), Polynomial<N>(field)),
                        Polynomial<N>(field)};
  Polynomial<N> p = f;
  while (!p.is_zero()) {
    std::size_t k = 0;
    const auto& lead = p.leading_term();
    if (const auto* g = first_reducer(lead.mono, divisors, k)) {
      const auto shift = g->leading_monomial().cofactor_in(lead.mono);
      const FieldElem c = lead.coeff / g->leading_coeff();
      out.quotients[k] += Polynomial<N>::monomial(field, shift, c);
      p = p.sub_mul_term(c, shift, *g);
    } else {
      out.remainder.push_trailing(p.pop_leading());
    }
  }
  return out;
}

template <std::size_t N>
Polynomial<N> reduce(const Polynomial<N>& f, std::span<const Polynomial<N>> divisors) {
  check_divisors(divisors);
  Polynomial<N> remainder(f.field());
  Polynomial<N> p = f;
  while (!p.is_zero()) {
    std::size_t k = 0;
    const auto& lead = p.leading_term();
    if (const auto* g = first_reducer(lead.mono, divisors, k)) {
      const auto shift = g->leading_monomial().cofactor_in(lead.mono);
      p = p.sub_mul_term(lead.coeff / g->leading_coeff(), shift, *g);
    } else {
      remainder.push_trailing(p.pop_leading());
    }
  }
  return remainder;
}

template <std::size_t N>
Polynomial<N> s_polynomial(const Polynomial<N>& f, const Polynomial<N>& g) {
  const auto l = lcm(f.leading_monomial(), g.leading_monomial());
  const auto left = f.mul_term(f.leading_monomial().cofactor_in(l), f.leading_coeff().inv());
  return left.sub_mul_term(g.leading_coeff().inv(), g.leading_monomial().cofactor_in(l), g);
}

template <std::size_t N>
MonomialIdeal<N> minimal_monomial_generators(std::span<const Monomial<N>> gens) {
  MonomialIdeal<N> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  MonomialIdeal<N> out;
  for (const auto& m : sorted) {
    bool redundant = false;
    for (const auto& other : sorted) {
      if (other != m && other.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

template <std::size_t N>
GroebnerBasis<N> buchberger(std::span<const Polynomial<N>> gens, int degree_bound) {
  if (gens.empty()) throw Error(ErrorCode::zero_polynomial, "buchberger needs at least one generator");
  const FieldSpec field = gens.front().field();
  std::vector<Polynomial<N>> basis;
  for (const auto& g : gens) {
    if (g.field() != field) throw Error(ErrorCode::field_mismatch, "generators over different fields");
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) throw Error(ErrorCode::zero_polynomial, "all generators are zero");

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  }
  auto lcm_of = [&](const std::pair<std::size_t, std::size_t>& p) {
    return lcm(basis[p.first].leading_monomial(), basis[p.second].leading_monomial());
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.contains({std::min(a, b), std::max(a, b)});
  };

  while (!pending.empty()) {
    auto best = pending.begin();
    auto best_lcm = lcm_of(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const auto l = lcm_of(*it);
      if (l < best_lcm) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    if (degree_bound >= 0 && best_lcm.degree() > degree_bound) continue;
    const auto& fi = basis[i];
    const auto& fj = basis[j];
    if (coprime(fi.leading_monomial(), fj.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = basis[k].leading_monomial().divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;
    Polynomial<N> h = reduce<N>(s_polynomial(fi, fj), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    const std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Keep one element per minimal leading monomial, then interreduce.
  std::vector<Polynomial<N>> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& lm = basis[k].leading_monomial();
    bool drop = false;
    for (std::size_t l = 0; l < basis.size() && !drop; ++l) {
      if (l == k) continue;
      const auto& other = basis[l].leading_monomial();
      drop = other.divides(lm) && (other != lm || l < k);
    }
    if (!drop) minimal.push_back(basis[k]);
  }
  std::vector<Polynomial<N>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial<N>> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    reduced.push_back(reduce<N>(minimal[k], others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial<N>& a, const Polynomial<N>& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return GroebnerBasis<N>(field, std::move(reduced));
}

template <std::size_t N>
bool is_groebner_basis(std::span<const Polynomial<N>> elements) {
  for (std::size_t j = 0; j < elements.size(); ++j) {
    if (elements[j].is_zero()) return false;
    for (std::size_t i = 0; i < j; ++i) {
      if (!reduce<N>(s_polynomial(elements[i], elements[j]), elements).is_zero()) return false;
    }
  }
  return true;
}

template <std::size_t N>
MonomialIdeal<N> initial_ideal(const GroebnerBasis<N>& gb) {
  std::vector<Monomial<N>> leads;
  for (const auto& g : gb.elements()) leads.push_back(g.leading_monomial());
  return minimal_monomial_generators<N>(leads);
}

template <std::size_t N>
bool same_ideal(std::span<const Polynomial<N>> a, std::span<const Polynomial<N>> b) {
  return buchberger<N>(a) == buchberger<N>(b);
}

std::map<int, int> minimalize_homogeneous(std::span<const TriPoly> gens) {
  std::vector<TriPoly> sorted;
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) {
      throw Error(ErrorCode::not_homogeneous, "generator " + g.to_string() + " is not homogeneous");
    }
    if (!g.is_zero()) sorted.push_back(g);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const TriPoly& a, const TriPoly& b) { return a.degree() < b.degree(); });
  std::vector<TriPoly> kept;
  std::map<int, int> beta;
  for (const auto& g : sorted) {
    if (!kept.empty()) {
      const auto gb = buchberger<3>(kept, g.degree());
      if (gb.contains(g)) continue;
    }
    kept.push_back(g);
    ++beta[g.degree()];
  }
  return beta;
}

#define HBCELL_INSTANTIATE(N)                                                                  \
  template DivisionResult<N> divide<N>(const Polynomial<N>&, std::span<const Polynomial<N>>);  \
  template Polynomial<N> reduce<N>(const Polynomial<N>&, std::span<const Polynomial<N>>);      \
  template Polynomial<N> s_polynomial<N>(const Polynomial<N>&, const Polynomial<N>&);         \
  template GroebnerBasis<N> buchberger<N>(std::span<const Polynomial<N>>, int);                \
  template bool is_groebner_basis<N>(std::span<const Polynomial<N>>);                          \
  template MonomialIdeal<N> minimal_monomial_generators<N>(std::span<const Monomial<N>>);      \
  template MonomialIdeal<N> initial_ideal<N>(const GroebnerBasis<N>&);                         \
  template bool same_ideal<N>(std::span<const Polynomial<N>>, std::span<const Polynomial<N>>);

HBCELL_INSTANTIATE(2)
HBCELL_INSTANTIATE(3)

#undef HBCELL_INSTANTIATE

}  // namespace hbcell
