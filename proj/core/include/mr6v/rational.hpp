#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mr6v {

/// Arbitrary-precision rational number, always kept in canonical form:
/// gcd(|numerator|, denominator) = 1 and denominator > 0. All arithmetic is
/// exact. Values are immutable in spirit (operations return new values), so
/// concurrent reads are safe.
///
/// Text format (used by the CLI, JSON files and CSV alike): optional minus
/// sign, decimal digits, optionally "/" and a positive integer denominator.
/// Examples: "5", "-7/3". A zero denominator is rejected.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {  // NOLINT(google-explicit-constructor) numeric literal convenience
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long n, long d);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Strict parse of the rational text format; throws Error(ParseError).
  static Rational parse(std::string_view text);

  /// Integer value from a GMP integer.
  static Rational of_mpz(const mpz_t z) {
    Rational r;
    mpq_set_z(r.q_, z);
    return r;
  }

  /// Canonical "n" or "n/d" rendering.
  std::string str() const;

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  /// 1/x; throws on zero.
  Rational reciprocal() const;
  /// x^e for any integer e (e < 0 requires x != 0); x^0 = 1 including 0^0.
  Rational pow(long e) const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return mpq_get_d(q_); }

  /// Raw handle for interop with GMP/MPFR code paths.
  const __mpq_struct* raw() const { return q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_t q_;
};

}  // namespace mr6v
