#include "mr6v/thermo.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mr6v/homogeneous.hpp"
#include "mr6v/identities.hpp"
#include "mr6v/matrix.hpp"
#include "mr6v/polynomial.hpp"

namespace mr6v::thermo {

namespace {

/// det of the Hankel matrix with per-column derivative-order shifts.
Rational hankel_det_shifted(std::size_t size, long d, const Rational& x,
                            const Rational& beta, const Rational& c,
                            const std::vector<std::size_t>& col_shift) {
  Matrix a(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      a.at(i, j) = homog::phi_derivative(static_cast<std::size_t>(d) + i + j + col_shift[j],
                                         x, beta, c);
  return a.det();
}

}  // namespace

Rational tau(std::size_t size, long d, const Rational& x, const Rational& beta,
             const Rational& c) {
  if (d < 0) throw std::invalid_argument("tau: d must be >= 0");
  if (size == 0) return Rational(1);
  return hankel_det_shifted(size, d, x, beta, c, std::vector<std::size_t>(size, 0));
}

TauDerivatives tau_derivatives(std::size_t size, long d, const Rational& x,
                               const Rational& beta, const Rational& c) {
  if (d < 0) throw std::invalid_argument("tau_derivatives: d must be >= 0");
  if (size == 0) return {Rational(1), Rational(0), Rational(0)};
  std::vector<std::size_t> shift(size, 0);
  TauDerivatives out;
  out.value = hankel_det_shifted(size, d, x, beta, c, shift);
  for (std::size_t j = 0; j < size; ++j) {
    shift[j] = 1;
    out.first += hankel_det_shifted(size, d, x, beta, c, shift);
    shift[j] = 2;
    out.second += hankel_det_shifted(size, d, x, beta, c, shift);
    shift[j] = 0;
  }
  for (std::size_t j1 = 0; j1 < size; ++j1) {
    for (std::size_t j2 = j1 + 1; j2 < size; ++j2) {
      shift[j1] = shift[j2] = 1;
      out.second += Rational(2) * hankel_det_shifted(size, d, x, beta, c, shift);
      shift[j1] = shift[j2] = 0;
    }
  }
  return out;
}

bool check_toda(std::size_t size, long d, const Rational& x, const Rational& beta,
                const Rational& c) {
  if (size == 0) throw std::invalid_argument("check_toda: size must be >= 1");
  const TauDerivatives t = tau_derivatives(size, d, x, beta, c);
  const Rational lhs = tau(size + 1, d, x, beta, c) * tau(size - 1, d, x, beta, c);
  return lhs == t.value * t.second - t.first * t.first;
}

bool check_z_derivatives(std::size_t n, std::size_t m, const Boundary& b, const Rational& c) {
  const Rational beta = b.beta();
  if (beta.is_one()) throw Error(Violation::BetaOne, "beta = 1");
  if (b.trace_b().is_zero() || b.trace_c_hat().is_zero())
    throw Error(Violation::TraceZero, "boundary traces must not vanish");

  const Polynomial z = homog::z_over_z0_polynomial(n, m, c, beta);
  const Polynomial zp = z.derivative();
  const Rational first = zp.eval(Rational(0));           // Z'(0)/Z^0
  const Rational second = zp.derivative().eval(Rational(0));  // Z''(0)/Z^0
  const Rational combo = second - first * first;

  const long nn = static_cast<long>(n), mm = static_cast<long>(m);
  const long nm = nn * mm;
  const long d = nn >= mm ? nn - mm : mm - nn;
  const Rational c2 = c * c;

  if (d == 0) {
    return first == (Rational(nn * nn) - beta * Rational(nn)) / c &&
           second == (Rational(nn * nn) * Rational(nn * nn - 1) -
                      Rational(2) * beta * Rational(nn * nn) * Rational(nn - 1)) /
                         c2 &&
           combo == -Rational(nn * nn) * (Rational(1) - beta) * (Rational(1) - beta) / c2;
  }
  if (d == 1) {
    return first == Rational(nm) / c &&
           second == (Rational(nm) * Rational(nm - 1) - beta * Rational(nm)) / c2 &&
           combo == -Rational(nm) * (Rational(1) + beta) / c2;
  }
  return first == Rational(nm) / c && second == Rational(nm) * Rational(nm - 1) / c2 &&
         combo == -Rational(nm) / c2;
}

Rational alpha_squared(long d, const Rational& beta) {
  if (d < 0) throw std::invalid_argument("alpha_squared: d must be >= 0");
  if (d > 1) return Rational(0);
  if (d == 1) return Rational(3) * beta;
  return Rational(3) * beta * (beta - Rational(2));
}

FreeEnergySpec FreeEnergySpec::select(long d, const Rational& beta) {
  return of(alpha_squared(d, beta));
}

FreeEnergySpec FreeEnergySpec::of(const Rational& beta_tilde) {
  FreeEnergySpec spec{beta_tilde, Regime::Zero};
  if (beta_tilde.sign() > 0) spec.regime = Regime::Positive;
  if (beta_tilde.sign() < 0) spec.regime = Regime::Negative;
  return spec;
}

namespace {

struct FreeEnergyEval {
  BigFloat value, first, second;
};

/// F~ and its two x~-derivatives on the appropriate branch.
FreeEnergyEval eval_free_energy(const BigFloat& xt, const Rational& beta_tilde) {
  if (xt.sign() <= 0)
    throw Error(Violation::DomainViolation, "free energy needs x~ > 0");
  const mpfr_prec_t prec = xt.precision();
  const BigFloat one = BigFloat::of(1L, prec);
  const BigFloat one_plus = one + xt;

  FreeEnergyEval out;
  const int sgn = beta_tilde.sign();
  if (sgn == 0) {
    out.value = -one_plus.log();
    out.first = -(one / one_plus);
    out.second = one / (one_plus * one_plus);
    return out;
  }

  if (sgn > 0) {
    const BigFloat a = BigFloat::of(beta_tilde, prec).sqrt();
    const BigFloat y = a * xt;
    const BigFloat sh = y.sinh();
    out.value = sh.log() - y.log() - one_plus.log();
    out.first = a * y.cosh() / sh - one / xt - one / one_plus;
    out.second = -(a * a) / (sh * sh) + one / (xt * xt) + one / (one_plus * one_plus);
    return out;
  }

  const BigFloat s = BigFloat::of(-beta_tilde, prec).sqrt();
  const BigFloat theta = s * xt;
  const BigFloat sn = theta.sin();
  if (sn.sign() <= 0)
    throw Error(Violation::DomainViolation,
                "x~ outside the open intervals where sin(sqrt(-beta~) x~) > 0");
  out.value = sn.log() - theta.log() - one_plus.log();
  out.first = s * theta.cos() / sn - one / xt - one / one_plus;
  out.second = -(s * s) / (sn * sn) + one / (xt * xt) + one / (one_plus * one_plus);
  return out;
}

}  // namespace

BigFloat free_energy_tilde(const BigFloat& x_tilde, const Rational& beta_tilde) {
  return eval_free_energy(x_tilde, beta_tilde).value;
}

InfiniteCharacteristics infinite_characteristics(const BigFloat& x_tilde,
                                                 const Rational& beta_tilde,
                                                 const BigFloat& k_t) {
  const FreeEnergyEval f = eval_free_energy(x_tilde, beta_tilde);
  const mpfr_prec_t prec = std::max(x_tilde.precision(), k_t.precision());
  const BigFloat ln_x = x_tilde.log();
  const BigFloat l = x_tilde * ln_x;
  const BigFloat two = BigFloat::of(2L, prec);

  InfiniteCharacteristics out;
  out.e_avg = k_t * l * f.first;
  out.e_fluct_sq = (k_t * k_t) * l * ((two - ln_x) * f.first - l * f.second);
  out.s = -f.value + l * f.first;
  return out;
}

ThermoCurvePoint curve_point(const BigFloat& x_tilde, const Rational& beta_tilde,
                             const BigFloat& k_t) {
  ThermoCurvePoint pt;
  pt.x_tilde = x_tilde;
  try {
    const FreeEnergyEval f = eval_free_energy(x_tilde, beta_tilde);
    pt.f_tilde = f.value;
    const auto ch = infinite_characteristics(x_tilde, beta_tilde, k_t);
    pt.e_avg = ch.e_avg;
    pt.e_fluct_sq = ch.e_fluct_sq;
    pt.s = ch.s;
    pt.in_domain = true;
  } catch (const Error& e) {
    if (e.code() != Violation::DomainViolation) throw;
  }
  return pt;
}

Rational semi_infinite_ratio(std::size_t n, std::size_t m, const Rational& x,
                             const Rational& c, const Boundary& b) {
  if (c.is_zero()) throw Error(Violation::ZeroCrossing, "c = 0");
  if ((x + c).is_zero()) throw Error(Violation::PoleHit, "x = -c");
  const Rational beta = b.beta();
  if (beta.is_one()) throw Error(Violation::BetaOne, "beta = 1");
  if (b.trace_b().is_zero() || b.trace_c_hat().is_zero())
    throw Error(Violation::TraceZero, "boundary traces must not vanish");

  const std::size_t size = std::min(n, m);
  const long d = static_cast<long>(std::max(n, m)) - static_cast<long>(size);
  const Rational t = x / (x + c);
  Matrix a(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const long e = d + static_cast<long>(i) + static_cast<long>(j) + 1;
      a.at(i, j) = identities::binomial(e - 1, static_cast<long>(i)) *
                   (Rational(1) - beta * t.pow(e));
    }
  }
  return a.det();
}

}  // namespace mr6v::thermo
