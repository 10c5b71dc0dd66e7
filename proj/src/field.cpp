#include "ausglue/field.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "ausglue/errors.hpp"

namespace ausglue {

namespace {
Field& active() {
  static Field f = Field::prime();
  return f;
}

std::int64_t reduce(const Rational& q, std::int64_t p) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(q) % p;
  cpp_int den = boost::multiprecision::denominator(q) % p;
  if (num < 0) num += p;
  if (den == 0) throw InvalidParams("denominator divisible by field characteristic");
  std::int64_t n = static_cast<std::int64_t>(num);
  std::int64_t d = static_cast<std::int64_t>(den);
  return static_cast<std::int64_t>((static_cast<__int128>(n) * mod_inverse(d, p)) % p);
}
}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  if (nr == 0) throw InvalidParams("inverse of zero");
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return t < 0 ? t + p : t;
}

std::string Field::name() const {
  return kind == FieldKind::Rational ? "Q" : "F_" + std::to_string(p);
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31))
    throw InvalidParams("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  Field f;
  f.kind = FieldKind::Prime;
  f.p = p;
  return f;
}

Field Field::rationals() {
  Field f;
  f.kind = FieldKind::Rational;
  f.p = 0;
  return f;
}

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "q" || t == "rational" || t == "rationals") return rationals();
  if (t == "p" || t == "fp") return prime();
  std::string digits = t;
  if (t.rfind("p:", 0) == 0) digits = t.substr(2);
  if (t.rfind("f_", 0) == 0) digits = t.substr(2);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit))
    return prime(std::stoll(digits));
  throw InvalidParams("unrecognised field '" + text + "'");
}

const Field& current_field() { return active(); }
void set_field(const Field& f) { active() = f; }

Field field_from_env(const Field& fallback) {
  const char* env = std::getenv("AUSGLUE_FIELD");
  if (env == nullptr || *env == '\0') return fallback;
  return Field::parse(env);
}

FieldGuard::FieldGuard(const Field& f) : saved_(current_field()) { set_field(f); }
FieldGuard::~FieldGuard() { set_field(saved_); }

Scalar::Scalar() : f_(current_field()) {}

Scalar::Scalar(long long v) : f_(current_field()) {
  if (f_.kind == FieldKind::Rational) {
    q_ = v;
  } else {
    r_ = v % f_.p;
    if (r_ < 0) r_ += f_.p;
  }
}

Scalar Scalar::from_rational(const Rational& q) {
  Scalar s;
  if (s.f_.kind == FieldKind::Rational)
    s.q_ = q;
  else
    s.r_ = reduce(q, s.f_.p);
  return s;
}

Scalar Scalar::from_residue(std::int64_t r, const Field& f) {
  Scalar s;
  s.f_ = f;
  s.r_ = r;
  return s;
}

void Scalar::check(const Scalar& o) const {
  if (f_ != o.f_) throw FieldMismatch(f_.name() + " vs " + o.f_.name());
}

bool Scalar::is_zero() const { return f_.kind == FieldKind::Rational ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return f_.kind == FieldKind::Rational ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar s = *this;
  if (f_.kind == FieldKind::Rational) {
    s.q_ += o.q_;
  } else {
    s.r_ += o.r_;
    if (s.r_ >= f_.p) s.r_ -= f_.p;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar s = *this;
  if (f_.kind == FieldKind::Rational) {
    s.q_ -= o.q_;
  } else {
    s.r_ -= o.r_;
    if (s.r_ < 0) s.r_ += f_.p;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar s = *this;
  if (f_.kind == FieldKind::Rational)
    s.q_ *= o.q_;
  else
    s.r_ = (r_ * o.r_) % f_.p;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw InvalidParams("inverse of zero scalar");
  Scalar s = *this;
  if (f_.kind == FieldKind::Rational)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inverse(r_, f_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (f_.kind == FieldKind::Rational)
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = f_.p - r_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check(o);
  return f_.kind == FieldKind::Rational ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (f_.kind == FieldKind::Rational) return q_.str();
  // Print residues symmetrically so small negatives read naturally.
  std::int64_t v = r_ > f_.p / 2 ? r_ - f_.p : r_;
  return std::to_string(v);
}

}  // namespace ausglue
