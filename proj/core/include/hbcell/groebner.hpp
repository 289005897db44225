#pragma once

#include <map>
#include <span>
#include <vector>

#include "hbcell/poly.hpp"

namespace hbcell {

template <std::size_t N>
struct DivisionResult {
  std::vector<Polynomial<N>> quotients;
  Polynomial<N> remainder;
};

/// Multivariate division: f = sum q_i g_i + r, leftmost reducer first.
template <std::size_t N>
DivisionResult<N> divide(const Polynomial<N>& f, std::span<const Polynomial<N>> divisors);

/// The remainder of divide(f, divisors) without tracking quotients.
template <std::size_t N>
Polynomial<N> reduce(const Polynomial<N>& f, std::span<const Polynomial<N>> divisors);

template <std::size_t N>
Polynomial<N> s_polynomial(const Polynomial<N>& f, const Polynomial<N>& g);

/// A reduced DRL Groebner basis: monic, interreduced, sorted by leading
/// monomial, largest first.
template <std::size_t N>
class GroebnerBasis {
 public:
  GroebnerBasis(FieldSpec field, std::vector<Polynomial<N>> elements)
      : field_(field), elements_(std::move(elements)) {}

  const FieldSpec& field() const noexcept { return field_; }
  std::span<const Polynomial<N>> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Polynomial<N>& operator[](std::size_t k) const { return elements_.at(k); }

  /// Normal form of f.
  Polynomial<N> reduce(const Polynomial<N>& f) const { return hbcell::reduce<N>(f, elements_); }
  bool contains(const Polynomial<N>& f) const { return reduce(f).is_zero(); }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  FieldSpec field_;
  std::vector<Polynomial<N>> elements_;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime and chain criteria. With degree_bound >= 0, S-pairs whose lcm
/// exceeds that degree are skipped; for homogeneous input the result then
/// agrees with the true basis in degrees <= degree_bound.
template <std::size_t N>
GroebnerBasis<N> buchberger(std::span<const Polynomial<N>> gens, int degree_bound = -1);

/// True iff every S-polynomial of the list reduces to 0 against it.
template <std::size_t N>
bool is_groebner_basis(std::span<const Polynomial<N>> elements);

/// Minimal generators of a monomial ideal, sorted DRL-descending.
template <std::size_t N>
using MonomialIdeal = std::vector<Monomial<N>>;

template <std::size_t N>
MonomialIdeal<N> minimal_monomial_generators(std::span<const Monomial<N>> gens);

template <std::size_t N>
MonomialIdeal<N> initial_ideal(const GroebnerBasis<N>& gb);

/// Equality of the ideals generated by two lists, via reduced bases.
template <std::size_t N>
bool same_ideal(std::span<const Polynomial<N>> a, std::span<const Polynomial<N>> b);

/// Degree -> number of minimal homogeneous generators, found by dropping
/// in ascending degree every generator that lies in the ideal of those kept.
std::map<int, int> minimalize_homogeneous(std::span<const TriPoly> gens);

}  // namespace hbcell
