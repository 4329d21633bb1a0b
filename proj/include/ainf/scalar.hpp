#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace ainf {

class Scalar;

/// Ground field: the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is prime and below 2^32.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// Parses "3", "-2", "3/2" exactly; a fraction over F_p is interpreted as a quotient.
  Scalar parse_scalar(std::string_view text) const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element. Arithmetic between different fields throws.
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    bool operator==(const Residue&) const = default;
  };

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  /// Canonical text: "n" or "n/d" for rationals, the residue in [0, p) otherwise.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;
  std::variant<mpq_class, Residue> value_;
};

/// (-1)^exponent in the given field.
Scalar sign_scalar(const Field& field, long exponent);

inline bool is_odd(long n) { return (n % 2) != 0; }

}  // namespace ainf
