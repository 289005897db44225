#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace hbcell {

/// Deterministic primality test for 64-bit integers (Miller-Rabin with a
/// fixed witness set that is exact below 2^64).
bool is_prime(std::uint64_t n) noexcept;

/// The coefficient field: either the rationals or a prime field F_p with p
/// below 2^63.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::rationals, 0); }
  static FieldSpec prime_field(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
  std::uint64_t prime() const noexcept { return prime_; }
  std::uint64_t characteristic() const noexcept { return prime_; }

  /// "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class FieldElem;

  FieldSpec(Kind kind, std::uint64_t prime) noexcept : kind_(kind), prime_(prime) {}

  Kind kind_;
  std::uint64_t prime_;
};

/// An exact scalar. Rationals are kept in lowest terms with positive
/// denominator; residues live in [0, p).
class FieldElem {
 public:
  FieldElem() = default;  // rational zero

  static FieldElem zero(const FieldSpec& field);
  static FieldElem one(const FieldSpec& field);
  static FieldElem from_int(const FieldSpec& field, long long value);
  static FieldElem from_rational(const FieldSpec& field, const mpq_class& value);

  /// Scalar text form: `-3`, `7/2`, `0`. Over F_p the fraction is mapped
  /// through the inverse of the denominator.
  static FieldElem parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// True for rationals below zero; residues are never negative.
  bool is_negative() const noexcept;

  FieldElem inv() const;
  FieldElem operator-() const;

  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  FieldElem& operator/=(const FieldElem& rhs);

  friend FieldElem operator+(FieldElem lhs, const FieldElem& rhs) { return lhs += rhs; }
  friend FieldElem operator-(FieldElem lhs, const FieldElem& rhs) { return lhs -= rhs; }
  friend FieldElem operator*(FieldElem lhs, const FieldElem& rhs) { return lhs *= rhs; }
  friend FieldElem operator/(FieldElem lhs, const FieldElem& rhs) { return lhs /= rhs; }

  friend bool operator==(const FieldElem& lhs, const FieldElem& rhs);

  std::string to_string() const;

  /// Valid only for elements of QQ.
  const mpq_class& rational() const;
  /// Valid only for elements of a prime field.
  std::uint64_t residue() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t prime;
  };

  explicit FieldElem(Residue r) : rep_(r) {}
  explicit FieldElem(mpq_class q) : rep_(std::move(q)) {}

  void check_same_field(const FieldElem& rhs) const;

  std::variant<mpq_class, Residue> rep_;
};

/// True when computations over `field` may rely on the characteristic
/// hypothesis: QQ, or p > max{j : h_j != 0}.
bool char_ok(const FieldSpec& field, std::span<const int> h);

}  // namespace hbcell
