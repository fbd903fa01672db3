#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mr6v/rational.hpp"

namespace mr6v {

/// Dense univariate polynomial over Rational. Coefficient i multiplies x^i;
/// trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& v);

  /// Lagrange interpolation through distinct abscissae.
  static Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& coeff(std::size_t i) const {
    static const Rational kZero;
    return i < c_.size() ? c_[i] : kZero;
  }

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& s) const;
  Polynomial pow(std::size_t e) const;

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace mr6v
