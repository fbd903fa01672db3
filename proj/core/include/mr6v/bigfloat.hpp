#pragma once

#include <mpfr.h>

#include <string>

#include "mr6v/rational.hpp"

namespace mr6v {

/// High-precision binary float (MPFR). Thermodynamic-curve evaluation runs at
/// kCurveBits (~50 significant decimal digits); emission rounds to 17
/// significant digits. Binary operations carry the larger operand precision,
/// so test oracles may instantiate higher-precision values where needed.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kCurveBits = 170;

  explicit BigFloat(mpfr_prec_t bits = kCurveBits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(const Rational& r, mpfr_prec_t bits = kCurveBits);
  static BigFloat of(long n, mpfr_prec_t bits = kCurveBits);
  static BigFloat of(double d, mpfr_prec_t bits = kCurveBits);
  /// Parses a decimal string (e.g. "0.1", "3e-2"); throws Error(ParseError).
  static BigFloat parse(const std::string& text, mpfr_prec_t bits = kCurveBits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  BigFloat operator-() const;
  BigFloat abs() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  BigFloat sqrt() const;
  BigFloat log() const;
  BigFloat log1p() const;
  BigFloat exp() const;
  BigFloat sin() const;
  BigFloat cos() const;
  BigFloat sinh() const;
  BigFloat cosh() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Shortest %g-style rendering with the given number of significant digits.
  std::string str(int significant_digits = 17) const;

 private:
  mpfr_t v_;
};

}  // namespace mr6v
