#ifndef HOMLEIB_SCALAR_HPP
#define HOMLEIB_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homleib {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldMismatchError : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

/// Base field of all computations: the rationals, or a prime field F_p.
/// Characteristic 2 is rejected everywhere.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals, p for F_p.
  std::int64_t characteristic() const { return p_; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  std::string to_string() const;

private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

/// Exact field element. Rational values are kept reduced with positive
/// denominator; mod-p values as residues in [0, p). No floating point.
class Scalar {
public:
  Scalar() : field_(Field::rationals()), rat_(0) {}

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, std::int64_t v);
  static Scalar from_rational(const BigRational& v) {
    Scalar s;
    s.rat_ = v;
    return s;
  }
  /// Parses "-3", "3/4" over Q; a residue string over F_p.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact decimal-free rendering: "-2", "3/4", residue for F_p.
  std::string to_string() const;

  /// Rational view (Q only).
  const BigRational& rational() const;
  /// Residue in [0, p) (F_p only).
  std::int64_t residue() const { return res_; }

  Scalar pow(long e) const;

private:
  static void require_same_field(const Scalar& a, const Scalar& b);
  Field field_;
  BigRational rat_;       // Q payload
  std::int64_t res_ = 0;  // F_p payload
};

bool is_prime(std::int64_t p);

}  // namespace homleib

#endif
