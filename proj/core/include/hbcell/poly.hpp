#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbcell/error.hpp"
#include "hbcell/field.hpp"

namespace hbcell {

/// Degree reported for the zero polynomial. Compares below every bound,
/// including the negative bounds of forced-zero slots.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Variable names for an N-variate ring: N=1 is K[y], N=2 is K[x,y],
/// N=3 is K[x,y,z]. Exponent slot k holds the k-th listed variable.
template <std::size_t N>
constexpr std::array<char, N> variable_names() {
  static_assert(N >= 1 && N <= 3);
  if constexpr (N == 1) {
    return {'y'};
  } else if constexpr (N == 2) {
    return {'x', 'y'};
  } else {
    return {'x', 'y', 'z'};
  }
}

template <std::size_t N>
struct Monomial {
  std::array<std::uint32_t, N> exp{};

  static Monomial one() { return Monomial{}; }

  int degree() const {
    int d = 0;
    for (auto e : exp) d += static_cast<int>(e);
    return d;
  }

  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t k = 0; k < N; ++k) {
      if (exp[k] > other.exp[k]) return false;
    }
    return true;
  }

  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const {
    Monomial out;
    for (std::size_t k = 0; k < N; ++k) out.exp[k] = other.exp[k] - exp[k];
    return out;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t k = 0; k < N; ++k) out.exp[k] = a.exp[k] + b.exp[k];
    return out;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t k = 0; k < N; ++k) out.exp[k] = std::max(a.exp[k], b.exp[k]);
    return out;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < N; ++k) {
      if (a.exp[k] != 0 && b.exp[k] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Degree reverse lexicographic order with x > y > z: total degree first,
  /// then the smaller exponent in the last variable wins, recursively.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t k = N; k-- > 0;) {
      if (a.exp[k] != b.exp[k]) return b.exp[k] <=> a.exp[k];
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    constexpr auto names = variable_names<N>();
    std::string out;
    for (std::size_t k = 0; k < N; ++k) {
      if (exp[k] == 0) continue;
      if (!out.empty()) out += '*';
      out += names[k];
      if (exp[k] > 1) out += '^' + std::to_string(exp[k]);
    }
    return out.empty() ? "1" : out;
  }
};

inline Monomial<1> y_power(std::uint32_t e) { return Monomial<1>{{e}}; }
inline Monomial<2> xy_monomial(std::uint32_t a, std::uint32_t b) { return Monomial<2>{{a, b}}; }
inline Monomial<3> xyz_monomial(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return Monomial<3>{{a, b, c}};
}

/// Sparse polynomial with exact coefficients. Terms are stored without
/// zeros and sorted DRL-descending, so the first term is the leading one.
template <std::size_t N>
class Polynomial {
 public:
  using Mono = Monomial<N>;

  struct Term {
    Mono mono;
    FieldElem coeff;
  };

  Polynomial() : field_(FieldSpec::rationals()) {}
  explicit Polynomial(FieldSpec field) : field_(field) {}

  static Polynomial constant(const FieldSpec& field, const FieldElem& c) {
    return monomial(field, Mono::one(), c);
  }
  static Polynomial constant(const FieldSpec& field, long long c) {
    return constant(field, FieldElem::from_int(field, c));
  }
  static Polynomial monomial(const FieldSpec& field, const Mono& m, const FieldElem& c) {
    Polynomial p(field);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial monomial(const FieldSpec& field, const Mono& m) {
    return monomial(field, m, FieldElem::one(field));
  }

  /// Builds from unordered terms, merging duplicates and dropping zeros.
  static Polynomial from_terms(const FieldSpec& field, std::vector<Term> terms) {
    Polynomial p(field);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  static Polynomial parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  int degree() const {
    int d = kZeroDegree;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  int degree_in(std::size_t var) const {
    int d = kZeroDegree;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp[var]));
    return d;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::zero_polynomial, "leading term of 0");
    return terms_.front();
  }
  const Mono& leading_monomial() const { return leading_term().mono; }
  const FieldElem& leading_coeff() const { return leading_term().coeff; }

  FieldElem coeff(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return FieldElem::zero(field_);
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inv();
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) { return *this = merge(*this, rhs, false); }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = merge(*this, rhs, true); }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
    return from_terms(a.field_, std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const FieldElem& c) {
    if (c.is_zero()) return Polynomial(a.field_);
    Polynomial out = a;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }
  friend Polynomial operator*(const FieldElem& c, const Polynomial& a) { return a * c; }

  /// this * c * m. Multiplication by a monomial preserves the term order.
  Polynomial mul_term(const Mono& m, const FieldElem& c) const {
    Polynomial out(field_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
  }

  /// Removes and returns the leading term.
  Term pop_leading() {
    if (terms_.empty()) throw Error(ErrorCode::zero_polynomial, "leading term of 0");
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  /// Appends a term below every stored monomial.
  void push_trailing(Term t) {
    if (t.coeff.is_zero()) return;
    if (!terms_.empty() && !(terms_.back().mono > t.mono)) {
      throw Error(ErrorCode::structure_violation, "push_trailing out of order");
    }
    terms_.push_back(std::move(t));
  }

  /// this - c * m * g, computed in one merge pass.
  Polynomial sub_mul_term(const FieldElem& c, const Mono& m, const Polynomial& g) const {
    return merge(*this, g.mul_term(m, c), true);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.field_ != b.field_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (a.terms_[k].mono != b.terms_[k].mono || !(a.terms_[k].coeff == b.terms_[k].coeff)) {
        return false;
      }
    }
    return true;
  }

  /// DRL-descending text; coefficient 1 and the factor '*1' are omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      const bool negative = t.coeff.is_negative();
      const FieldElem magnitude = negative ? -t.coeff : t.coeff;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (t.mono.is_one()) {
        out += magnitude.to_string();
      } else if (magnitude.is_one()) {
        out += t.mono.to_string();
      } else {
        out += magnitude.to_string() + '*' + t.mono.to_string();
      }
    }
    return out;
  }

 private:
  void check_field(const Polynomial& other) const {
    if (field_ != other.field_) {
      throw Error(ErrorCode::field_mismatch, field_.name() + " vs " + other.field_.name());
    }
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_field(b);
    Polynomial out(a.field_);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].mono > b.terms_[j].mono)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].mono > a.terms_[i].mono) {
        const auto& t = b.terms_[j++];
        out.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        FieldElem c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                               : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) out.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  FieldSpec field_;
  std::vector<Term> terms_;
};

using UniPoly = Polynomial<1>;
using BiPoly = Polynomial<2>;
using TriPoly = Polynomial<3>;

namespace detail {

template <std::size_t N>
class PolyParser {
 public:
  PolyParser(const FieldSpec& field, std::string_view text) : field_(field), text_(text) {}

  Polynomial<N> run() {
    std::vector<typename Polynomial<N>::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto term = parse_term();
      if (negative) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      skip_ws();
    }
    return Polynomial<N>::from_terms(field_, std::move(terms));
  }

 private:
  typename Polynomial<N>::Term parse_term() {
    FieldElem coeff = FieldElem::one(field_);
    Monomial<N> mono;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_scalar();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t var = variable_index(c);
        ++pos_;
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        mono.exp[var] += e;
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) fail("dangling '*'");
        continue;
      }
      if (at_end() || peek() == '+' || peek() == '-') break;
    }
    if (!any) fail("expected a term");
    return {mono, coeff};
  }

  FieldElem parse_scalar() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::size_t save = pos_;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den_start == pos_) fail("missing denominator");
      std::string literal(text_.substr(start, save - start));
      literal += '/';
      literal += text_.substr(den_start, pos_ - den_start);
      return FieldElem::parse(field_, literal);
    }
    pos_ = save;
    return FieldElem::parse(field_, text_.substr(start, save - start));
  }

  std::uint32_t parse_exponent() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("missing exponent");
    if (pos_ - start > 6) fail("exponent too large");
    return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  std::size_t variable_index(char c) const {
    constexpr auto names = variable_names<N>();
    for (std::size_t k = 0; k < N; ++k) {
      if (names[k] == c) return k;
    }
    fail(std::string("unknown variable '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse_error,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  FieldSpec field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <std::size_t N>
Polynomial<N> Polynomial<N>::parse(const FieldSpec& field, std::string_view text) {
  return detail::PolyParser<N>(field, text).run();
}

// Embeddings K[y] -> K[x,y] -> K[x,y,z].

inline BiPoly embed_y(const UniPoly& p) {
  std::vector<BiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({xy_monomial(0, t.mono.exp[0]), t.coeff});
  return BiPoly::from_terms(p.field(), std::move(terms));
}

inline TriPoly embed_xy(const BiPoly& p) {
  std::vector<TriPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    terms.push_back({xyz_monomial(t.mono.exp[0], t.mono.exp[1], 0), t.coeff});
  }
  return TriPoly::from_terms(p.field(), std::move(terms));
}

/// The polynomial as an element of K[y], or nullopt if x occurs.
inline std::optional<UniPoly> as_univariate_y(const BiPoly& p) {
  std::vector<UniPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (t.mono.exp[0] != 0) return std::nullopt;
    terms.push_back({y_power(t.mono.exp[1]), t.coeff});
  }
  return UniPoly::from_terms(p.field(), std::move(terms));
}

/// f^hom: every term padded with z up to the total degree of f.
inline TriPoly homogenize(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "homogenization of 0");
  const int mu = f.degree();
  std::vector<TriPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    terms.push_back({xyz_monomial(t.mono.exp[0], t.mono.exp[1],
                                  static_cast<std::uint32_t>(mu - t.mono.degree())),
                     t.coeff});
  }
  return TriPoly::from_terms(f.field(), std::move(terms));
}

/// Univariate homogenization K[y] -> K[y,z], returned inside K[x,y,z].
inline TriPoly homogenize(const UniPoly& a) {
  return homogenize(embed_y(a));
}

/// F(x, y, 1).
inline BiPoly dehomogenize(const TriPoly& F) {
  std::vector<BiPoly::Term> terms;
  terms.reserve(F.size());
  for (const auto& t : F.terms()) terms.push_back({xy_monomial(t.mono.exp[0], t.mono.exp[1]), t.coeff});
  return BiPoly::from_terms(F.field(), std::move(terms));
}

/// Largest s with z^s dividing F (0 for F = 0).
inline int z_adic_valuation(const TriPoly& F) {
  if (F.is_zero()) return 0;
  std::uint32_t s = std::numeric_limits<std::uint32_t>::max();
  for (const auto& t : F.terms()) s = std::min(s, t.mono.exp[2]);
  return static_cast<int>(s);
}

struct UniDivision {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division in K[y]; the divisor must be nonzero.
inline UniDivision divide_univariate(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "division by the zero polynomial");
  const FieldSpec& field = a.field();
  const int db = b.degree();
  const FieldElem lead_inv = b.leading_coeff().inv();
  UniPoly q(field);
  UniPoly r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const auto shift = y_power(static_cast<std::uint32_t>(r.degree() - db));
    const FieldElem c = r.leading_coeff() * lead_inv;
    q += UniPoly::monomial(field, shift, c);
    r = r.sub_mul_term(c, shift, b);
  }
  return {std::move(q), std::move(r)};
}

}  // namespace hbcell
