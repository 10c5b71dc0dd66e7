#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ausglue {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Prime, Rational };

// The base field. One field is active per session; matrices and scalars
// remember the field they were built in and refuse to mix.
struct Field {
  FieldKind kind = FieldKind::Prime;
  std::int64_t p = 32003;

  bool operator==(const Field& o) const {
    return kind == o.kind && (kind == FieldKind::Rational || p == o.p);
  }
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string name() const;

  static Field prime(std::int64_t p = 32003);
  static Field rationals();
  // Accepts "q", "Q", "rational", "rationals", "p", "fp", "32003", "p:101".
  static Field parse(const std::string& text);
};

const Field& current_field();
void set_field(const Field& f);
// Reads AUSGLUE_FIELD; falls back when unset.
Field field_from_env(const Field& fallback);

class FieldGuard {
 public:
  explicit FieldGuard(const Field& f);
  ~FieldGuard();
  FieldGuard(const FieldGuard&) = delete;
  FieldGuard& operator=(const FieldGuard&) = delete;

 private:
  Field saved_;
};

class Scalar {
 public:
  Scalar();
  Scalar(long long v);  // NOLINT: integers embed implicitly
  Scalar(int v) : Scalar(static_cast<long long>(v)) {}
  static Scalar from_rational(const Rational& q);
  static Scalar from_residue(std::int64_t r, const Field& f);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::int64_t residue() const { return r_; }
  const Rational& rational() const { return q_; }
  std::string str() const;

 private:
  void check(const Scalar& o) const;
  Field f_;
  std::int64_t r_ = 0;
  Rational q_;
};

bool is_prime(std::int64_t n);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace ausglue
