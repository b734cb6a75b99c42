// Exact scalar arithmetic over Q (boost cpp_rational) or a prime field F_p.

#include <homleib/scalar.hpp>

#include <boost/multiprecision/miller_rabin.hpp>

namespace homleib {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

// extended Euclid; a in [0, p), p prime
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  if (a == 0) throw input_error("division by zero in F_p");
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
  return mod_reduce(t, p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p == 2)
    throw input_error("F_2 is not supported (obstruction arithmetic divides by 2)");
  if (p < 3 || !boost::multiprecision::miller_rabin_test(boost::multiprecision::cpp_int(p), 32))
    throw input_error("field modulus must be an odd prime, got " + std::to_string(p));
  return Field{Fp, p};
}

std::string Field::to_string() const {
  if (kind == Q) return "Q";
  return "Fp:" + std::to_string(p);
}

Scalar Scalar::from_int(const Field& f, std::int64_t v) {
  Scalar s(f);
  if (f.kind == Field::Q)
    s.q_ = v;
  else
    s.r_ = mod_reduce(v, f.p);
  return s;
}

Scalar Scalar::from_fraction(const Field& f, std::int64_t num, std::int64_t den) {
  if (den == 0) throw input_error("zero denominator");
  Scalar s = from_int(f, num);
  return s /= from_int(f, den);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw input_error("empty scalar literal");
  std::string body = text.substr(b, e - b + 1);

  std::string num = body, den = "1";
  if (size_t slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  auto check_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!check_int(num) || !check_int(den))
    throw input_error("bad scalar literal '" + text + "'");

  boost::multiprecision::cpp_int n(num), d(den);
  if (d == 0) throw input_error("zero denominator in '" + text + "'");

  Scalar s(f);
  if (f.kind == Field::Q) {
    s.q_ = Rational(n) / Rational(d);
  } else {
    boost::multiprecision::cpp_int p(f.p);
    std::int64_t nr = static_cast<std::int64_t>(((n % p) + p) % p);
    std::int64_t dr = static_cast<std::int64_t>(((d % p) + p) % p);
    if (dr == 0)
      throw input_error("denominator of '" + text + "' vanishes mod " + std::to_string(f.p));
    s.r_ = mod_mul(nr, mod_inv(dr, f.p), f.p);
  }
  return s;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw input_error("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

bool Scalar::is_zero() const {
  return field_.kind == Field::Q ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == Field::Q ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.kind == Field::Q)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw input_error("inverse of zero");
  Scalar s(field_);
  if (field_.kind == Field::Q)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inv(r_, field_.p);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.kind == Field::Q)
    q_ += o.q_;
  else
    r_ = mod_reduce(r_ + o.r_, field_.p);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.kind == Field::Q)
    q_ -= o.q_;
  else
    r_ = mod_reduce(r_ - o.r_, field_.p);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.kind == Field::Q)
    q_ *= o.q_;
  else
    r_ = mod_mul(r_, o.r_, field_.p);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  if (o.is_zero()) throw input_error("division by zero");
  if (field_.kind == Field::Q)
    q_ /= o.q_;
  else
    r_ = mod_mul(r_, mod_inv(o.r_, field_.p), field_.p);
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return field_.kind == Field::Q ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (field_.kind == Field::Fp) return std::to_string(r_);
  std::string s = numerator(q_).str();
  if (denominator(q_) != 1) s += "/" + denominator(q_).str();
  return s;
}

const Rational& Scalar::rational() const {
  if (field_.kind != Field::Q) throw input_error("not a rational scalar");
  return q_;
}

std::int64_t Scalar::residue() const {
  if (field_.kind != Field::Fp) throw input_error("not a prime-field scalar");
  return r_;
}

}  // namespace homleib
