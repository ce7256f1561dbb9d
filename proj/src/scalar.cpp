#include "tcat/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace tcat {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Modular inverse via extended Euclid; m prime, 0 < a < m.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw std::domain_error("element has no modular inverse");
  return t < 0 ? t + m : t;
}

std::int64_t normalize_mod(long long n, unsigned p) {
  std::int64_t r = n % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

Field Field::prime(unsigned q) {
  if (!is_prime(q)) throw std::invalid_argument("field order must be prime");
  return Field{q};
}

std::string Field::name() const {
  return p == 0 ? "Q" : "Z" + std::to_string(p);
}

Field parse_field(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "Q" || t == "Q0" || t == "RATIONAL" || t == "RATIONALS") return Field::rationals();
  if ((t.size() > 1 && (t[0] == 'Z' || t[0] == 'F')) &&
      std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    unsigned long q = std::stoul(t.substr(1));
    return Field::prime(static_cast<unsigned>(q));
  }
  throw std::invalid_argument("unrecognized field name: " + text);
}

Scalar Scalar::zero(Field f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(Field f) { return from_int(1, f); }

Scalar Scalar::from_int(long long n, Field f) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational())
    s.rat_ = Rational(n);
  else
    s.res_ = normalize_mod(n, f.p);
  return s;
}

Scalar Scalar::from_fraction(long long num, long long den, Field f) {
  return from_int(num, f) / from_int(den, f);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = -rat_;
  else if (res_ != 0)
    s.res_ = field_.p - res_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ += o.rat_;
  else
    s.res_ = (res_ + o.res_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ *= o.rat_;
  else
    s.res_ = (res_ * o.res_) % field_.p;  // p fits in 32 bits, product fits in 64
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in coefficient field");
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) {
    return rat_.str();
  }
  return std::to_string(res_);
}

const Scalar::Rational& Scalar::rational_value() const {
  if (!field_.is_rational()) throw std::logic_error("not a rational scalar");
  return rat_;
}

std::int64_t Scalar::residue_value() const {
  if (field_.is_rational()) throw std::logic_error("not a prime-field scalar");
  return res_;
}

}  // namespace tcat
