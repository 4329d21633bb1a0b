#include "ainf/scalar.hpp"

#include <charconv>

#include "ainf/error.hpp"

namespace ainf {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    fail(ErrorKind::kArgument, "field characteristic must be a prime below 2^32, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      fail(ErrorKind::kParse, "bad field descriptor '" + std::string(text) + "'");
    return prime(p);
  }
  fail(ErrorKind::kParse, "bad field descriptor '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const { return is_rational() ? "q" : "fp:" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (is_rational()) return Scalar(mpq_class(value));
  return Scalar(Scalar::Residue{reduce(mpz_class(value), p_), p_});
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    fail(ErrorKind::kParse, "bad coefficient '" + s + "'");
  if (q.get_den() == 0) fail(ErrorKind::kParse, "zero denominator in coefficient '" + s + "'");
  q.canonicalize();
  if (is_rational()) return Scalar(q);
  std::uint64_t den = reduce(q.get_den(), p_);
  if (den == 0) fail(ErrorKind::kSemantic, "coefficient '" + s + "' has denominator divisible by p");
  Scalar num(Scalar::Residue{reduce(q.get_num(), p_), p_});
  return num / Scalar(Scalar::Residue{den, p_});
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (value_.index() != other.value_.index())
    fail(ErrorKind::kArgument, "mixing rational and modular scalars");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus != std::get<Residue>(other.value_).modulus)
      fail(ErrorKind::kArgument, "mixing scalars of different characteristic");
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(other.value_).value) % r->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(other.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::kArgument, "division by zero");
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  return Scalar(inv);
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
  check_same_field(other);
  return value_ == other.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

Scalar sign_scalar(const Field& field, long exponent) { return field.from_int(is_odd(exponent) ? -1 : 1); }

}  // namespace ainf
