#include "hbcell/field.hpp"

#include <cctype>
#include <string>

#include "hbcell/error.hpp"

namespace hbcell {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime, a != 0 mod p.
  return pow_mod(a, p - 2, p);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

bool is_integer_literal(std::string_view s) {
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63U) || !is_prime(p)) {
    throw Error(ErrorCode::bad_prime, std::to_string(p) + " is not a prime below 2^63");
  }
  return FieldSpec(Kind::prime_field, p);
}

std::string FieldSpec::name() const {
  if (is_rationals()) return "QQ";
  return "GF(" + std::to_string(prime_) + ")";
}

FieldElem FieldElem::zero(const FieldSpec& field) { return from_int(field, 0); }

FieldElem FieldElem::one(const FieldSpec& field) { return from_int(field, 1); }

FieldElem FieldElem::from_int(const FieldSpec& field, long long value) {
  if (field.is_rationals()) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
    return FieldElem(mpq_class(z));
  }
  const auto p = static_cast<long long>(field.prime());
  long long r = value % p;
  if (r < 0) r += p;
  return FieldElem(Residue{static_cast<std::uint64_t>(r), field.prime()});
}

FieldElem FieldElem::from_rational(const FieldSpec& field, const mpq_class& value) {
  if (field.is_rationals()) return FieldElem(value);
  const std::uint64_t p = field.prime();
  const std::uint64_t num = reduce_mpz(value.get_num(), p);
  const std::uint64_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorCode::division_by_zero,
                "denominator of " + value.get_str() + " vanishes in " + field.name());
  }
  return FieldElem(Residue{mul_mod(num, inv_mod(den, p), p), p});
}

FieldElem FieldElem::parse(const FieldSpec& field, std::string_view text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  std::string num = trim(s.substr(0, slash));
  std::string den = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::parse_error, "malformed scalar '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num);
  mpz_class d(den);
  if (d == 0) throw Error(ErrorCode::division_by_zero, "zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return from_rational(field, q);
}

FieldSpec FieldElem::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return FieldSpec(FieldSpec::Kind::prime_field, r->prime);
  }
  return FieldSpec::rationals();
}

bool FieldElem::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool FieldElem::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

bool FieldElem::is_negative() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) < 0;
  return false;
}

void FieldElem::check_same_field(const FieldElem& rhs) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&rhs.rep_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->prime != b->prime)) {
    throw Error(ErrorCode::field_mismatch, field().name() + " vs " + rhs.field().name());
  }
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return FieldElem(Residue{inv_mod(r->value, r->prime), r->prime});
  }
  mpq_class q = 1 / std::get<mpq_class>(rep_);
  q.canonicalize();
  return FieldElem(std::move(q));
}

FieldElem FieldElem::operator-() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return FieldElem(Residue{r->value == 0 ? 0 : r->prime - r->value, r->prime});
  }
  return FieldElem(mpq_class(-std::get<mpq_class>(rep_)));
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    const std::uint64_t p = r->prime;
    const std::uint64_t b = std::get<Residue>(rhs.rep_).value;
    r->value = r->value >= p - b ? r->value - (p - b) : r->value + b;
  } else {
    std::get<mpq_class>(rep_) += std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    const std::uint64_t b = std::get<Residue>(rhs.rep_).value;
    r->value = r->value >= b ? r->value - b : r->value + (r->prime - b);
  } else {
    std::get<mpq_class>(rep_) -= std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    r->value = mul_mod(r->value, std::get<Residue>(rhs.rep_).value, r->prime);
  } else {
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inv();
}

bool operator==(const FieldElem& lhs, const FieldElem& rhs) {
  lhs.check_same_field(rhs);
  if (const auto* r = std::get_if<FieldElem::Residue>(&lhs.rep_)) {
    return r->value == std::get<FieldElem::Residue>(rhs.rep_).value;
  }
  return std::get<mpq_class>(lhs.rep_) == std::get<mpq_class>(rhs.rep_);
}

std::string FieldElem::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  return std::get<mpq_class>(rep_).get_str();
}

const mpq_class& FieldElem::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw Error(ErrorCode::field_mismatch, "element of " + field().name() + " is not rational");
}

std::uint64_t FieldElem::residue() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value;
  throw Error(ErrorCode::field_mismatch, "rational element has no residue");
}

bool char_ok(const FieldSpec& field, std::span<const int> h) {
  if (field.is_rationals()) return true;
  int last = -1;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] != 0) last = static_cast<int>(j);
  }
  return field.prime() > static_cast<std::uint64_t>(last < 0 ? 0 : last);
}

}  // namespace hbcell
