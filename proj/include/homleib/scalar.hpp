#ifndef HOMLEIB_SCALAR_HPP
#define HOMLEIB_SCALAR_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include <homleib/errors.hpp>

namespace homleib {

using Rational = boost::multiprecision::cpp_rational;

// Scalar field tag: the rationals, or integers mod an odd prime p.
struct Field {
  enum Kind { Q, Fp };
  Kind kind = Q;
  std::int64_t p = 0;  // modulus, only meaningful for Fp

  static Field rationals() { return Field{Q, 0}; }
  static Field prime(std::int64_t p);  // rejects p = 2 and non-primes

  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Exact field element. Every value carries its field; mixing fields in one
// operation is an input error.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  explicit Scalar(const Field& f) : field_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, std::int64_t v);
  static Scalar from_fraction(const Field& f, std::int64_t num, std::int64_t den);
  // Accepts "-12", "3/4", "  7 " (surrounding whitespace ignored).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws input_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Lowest terms with positive denominator: "-3/7", "5", "0". Fp: "0".."p-1".
  std::string to_string() const;

  // Rational value; only valid over Q.
  const Rational& rational() const;
  // Residue in [0, p); only valid over Fp.
  std::int64_t residue() const;

 private:
  Field field_;
  Rational q_;           // value when field is Q
  std::int64_t r_ = 0;   // value when field is Fp, reduced to [0, p)

  void require_same_field(const Scalar& o) const;
};

}  // namespace homleib

#endif
