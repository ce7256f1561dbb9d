#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcat {

// Coefficient field selector: p == 0 means the rationals, otherwise the
// prime field with p elements.  p is not validated for primality here;
// field construction goes through Field::rationals() / Field::prime().
struct Field {
  unsigned p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(unsigned q);

  bool is_rational() const { return p == 0; }
  unsigned characteristic() const { return p; }
  bool operator==(const Field&) const = default;
  std::string name() const;
};

// Parses "Q", "Z2", "Z3", "F5", ... (case-insensitive).
Field parse_field(const std::string& text);

struct FieldMismatch : std::logic_error {
  FieldMismatch() : std::logic_error("scalar arithmetic across different coefficient fields") {}
};

// Exact field element.  Over the rationals the value is an arbitrary-precision
// fraction; over F_p it is the canonical residue in [0, p).
class Scalar {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  Scalar() : field_{0}, rat_(0) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(long long n, Field f);
  // num/den as a field element; throws if den vanishes in the field.
  static Scalar from_fraction(long long num, long long den, Field f);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "3", "-1/2", residues print as plain integers.
  std::string str() const;

  // Exposed for tests over Q.
  const Rational& rational_value() const;
  std::int64_t residue_value() const;

 private:
  void check(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch{};
  }

  Field field_;
  Rational rat_;           // used when field_.p == 0
  std::int64_t res_ = 0;   // used when field_.p > 0, normalized to [0, p)
};

}  // namespace tcat
