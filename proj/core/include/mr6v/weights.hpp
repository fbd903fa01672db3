#pragma once

#include <span>

#include "mr6v/errors.hpp"
#include "mr6v/rational.hpp"

namespace mr6v {

/// The kernel functions of the vertex-weight algebra, all sharing one
/// crossing constant c:
///
///   g(u,v) = c/(u-v),   f(u,v) = (u-v+c)/(u-v),   h(u,v) = (u-v+c)/c,
///   phi_beta(x) = c/x - beta*c/(x+c),   psi_k(x) = (-x/c)^k,
///
/// with f = g + 1 = g*h. Delta / Delta' are the two Vandermonde products.
class WeightFns {
 public:
  explicit WeightFns(Rational c) : c_(std::move(c)) {
    if (c_.is_zero()) throw Error(Violation::ZeroCrossing, "crossing constant c = 0");
  }

  const Rational& c() const { return c_; }

  Rational g(const Rational& u, const Rational& v) const {
    const Rational d = u - v;
    if (d.is_zero()) throw Error(Violation::PoleHit, "g(u,v) pole at u = v");
    return c_ / d;
  }
  Rational f(const Rational& u, const Rational& v) const {
    const Rational d = u - v;
    if (d.is_zero()) throw Error(Violation::PoleHit, "f(u,v) pole at u = v");
    return (d + c_) / d;
  }
  Rational h(const Rational& u, const Rational& v) const { return (u - v + c_) / c_; }

  Rational phi(const Rational& x, const Rational& beta) const {
    if (x.is_zero()) throw Error(Violation::PoleHit, "phi pole at x = 0");
    const Rational xc = x + c_;
    if (xc.is_zero()) throw Error(Violation::PoleHit, "phi pole at x = -c");
    return c_ / x - beta * c_ / xc;
  }
  Rational phi1(const Rational& x) const { return phi(x, Rational(1)); }

  Rational psi(const Rational& x, long k) const { return (-(x / c_)).pow(k); }

  /// Product g(u_bar, v_bar) over both sets.
  Rational g_prod(std::span<const Rational> us, std::span<const Rational> vs) const;
  /// Product h(u_bar, v_bar) over both sets.
  Rational h_prod(std::span<const Rational> us, std::span<const Rational> vs) const;

  /// Delta(x_bar) = prod_{i<j} (x_j - x_i)/c
  Rational vandermonde(std::span<const Rational> xs) const;
  /// Delta'(x_bar) = prod_{i<j} (x_i - x_j)/c
  Rational vandermonde_prime(std::span<const Rational> xs) const;

 private:
  Rational c_;
};

/// prod_{x in xs} fn(x); the shorthand the set-product notation expands to.
template <typename F>
Rational product_over(std::span<const Rational> xs, F&& fn) {
  Rational acc(1);
  for (const auto& x : xs) acc *= fn(x);
  return acc;
}

}  // namespace mr6v
