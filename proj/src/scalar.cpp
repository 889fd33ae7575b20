#include "homleib/scalar.hpp"

namespace homleib {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
  if (p == 2) throw PreconditionError("characteristic 2 is not supported");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

namespace {
std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw PreconditionError("division by zero in F_p");
  return mod_pos(t, p);
}
}  // namespace

Scalar Scalar::from_int(const Field& f, std::int64_t v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational())
    s.rat_ = v;
  else
    s.res_ = mod_pos(v, f.characteristic());
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  std::string t(text);
  try {
    if (f.is_rational()) {
      Scalar s;
      s.rat_ = BigRational(t);
      // cpp_rational normalizes sign/gcd itself
      return s;
    }
    auto slash = t.find('/');
    if (slash != std::string::npos) {
      Scalar num = parse(f, t.substr(0, slash));
      Scalar den = parse(f, t.substr(slash + 1));
      return num / den;
    }
    std::size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw ParseError("trailing characters in scalar '" + t + "'");
    return from_int(f, v);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse scalar '" + t + "'");
  }
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_)
    throw FieldMismatchError("mixed scalar fields " + a.field_.to_string() + " and " + b.field_.to_string());
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.characteristic());
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_rational())
    s.rat_ = a.rat_ + b.rat_;
  else
    s.res_ = (a.res_ + b.res_) % a.field_.characteristic();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_rational())
    s.rat_ = a.rat_ * b.rat_;
  else
    s.res_ = (a.res_ * b.res_) % a.field_.characteristic();
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  return a.field_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rational()) return std::to_string(res_);
  return rat_.str();
}

const BigRational& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatchError("rational() on a mod-p scalar");
  return rat_;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = Scalar::one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace homleib
