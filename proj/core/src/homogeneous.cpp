#include "mr6v/homogeneous.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mr6v/identities.hpp"
#include "mr6v/matrix.hpp"
#include "mr6v/weights.hpp"

namespace mr6v::homog {

namespace {

struct TracePack {
  Rational tb, tc, tbc, beta;
};

TracePack require_traces(const Boundary& b) {
  TracePack t{b.trace_b(), b.trace_c_hat(), b.trace_bc(), Rational(0)};
  if (t.tbc.is_zero()) throw Error(Violation::TraceZero, "tr(B C_hat) = 0");
  t.beta = b.beta();
  if (t.beta.is_one()) throw Error(Violation::BetaOne, "beta = 1");
  if (t.tb.is_zero()) throw Error(Violation::TraceZero, "tr(B) = 0");
  if (t.tc.is_zero()) throw Error(Violation::TraceZero, "tr(C_hat) = 0");
  return t;
}

Polynomial det_poly(std::vector<std::vector<Polynomial>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(Rational(1));
  if (n == 1) return a[0][0];
  Polynomial acc;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Polynomial>> minor(n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
      if (i == k) continue;
      minor[r].assign(a[i].begin() + 1, a[i].end());
      ++r;
    }
    Polynomial term = a[k][0] * det_poly(minor);
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Rational phi_derivative(std::size_t k, const Rational& x, const Rational& beta,
                        const Rational& c) {
  if (x.is_zero()) throw Error(Violation::PoleHit, "phi derivative pole at x = 0");
  const Rational xc = x + c;
  if (xc.is_zero()) throw Error(Violation::PoleHit, "phi derivative pole at x = -c");
  const long e = static_cast<long>(k) + 1;
  const Rational value =
      identities::factorial(k) * (c / x.pow(e) - beta * c / xc.pow(e));
  return k % 2 == 0 ? value : -value;
}

Rational z0(std::size_t n, std::size_t m, const Boundary& b) {
  if (n == 0 || m == 0) throw std::invalid_argument("z0: lattice sizes must be >= 1");
  const TracePack t = require_traces(b);
  const long min_nm = static_cast<long>(std::min(n, m));
  const long d = static_cast<long>(std::max(n, m)) - min_nm;
  Rational trace_form = t.tb.pow(static_cast<long>(n)) * t.tc.pow(static_cast<long>(m)) /
                        (Rational(1) - t.beta).pow(min_nm);
  const Rational bc_form = t.tbc.pow(min_nm) * (n <= m ? t.tc : t.tb).pow(d);
  if (trace_form != bc_form)
    throw std::logic_error("z0: the two printed forms disagree");
  return trace_form;
}

Polynomial z_over_z0_polynomial(std::size_t n, std::size_t m, const Rational& c,
                                const Rational& beta) {
  if (c.is_zero()) throw Error(Violation::ZeroCrossing, "c = 0");
  const std::size_t size = std::min(n, m);
  const long d = static_cast<long>(std::max(n, m)) - static_cast<long>(size);
  const Rational inv_c = c.reciprocal();
  const Polynomial one_plus = Polynomial(std::vector<Rational>{Rational(1), inv_c});
  const Polynomial x_over_c = Polynomial(std::vector<Rational>{Rational(0), inv_c});

  std::vector<std::vector<Polynomial>> a(size, std::vector<Polynomial>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const long e = d + static_cast<long>(i) + static_cast<long>(j) + 1;
      const Polynomial entry =
          one_plus.pow(static_cast<std::size_t>(e)) -
          x_over_c.pow(static_cast<std::size_t>(e)).scaled(beta);
      a[i][j] = entry.scaled(
          identities::binomial(e - 1, static_cast<long>(i)));
    }
  }
  return det_poly(a);
}

Rational partition_homogeneous(const HomogParams& h, const Boundary& b) {
  if (h.c.is_zero()) throw Error(Violation::ZeroCrossing, "c = 0");
  if ((h.x + h.c).is_zero())
    throw Error(Violation::PoleHit, "x = -c makes the a-weight vanish");
  const TracePack t = require_traces(b);
  const std::size_t size = std::min(h.n, h.m);
  const long d = h.d();
  const Rational one_plus = Rational(1) + h.x / h.c;
  const Rational x_over_c = h.x / h.c;

  Matrix a(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const long e = d + static_cast<long>(i) + static_cast<long>(j) + 1;
      a.at(i, j) = identities::binomial(e - 1, static_cast<long>(i)) *
                   (one_plus.pow(e) - t.beta * x_over_c.pow(e));
    }
  }
  return z0(h.n, h.m, b) * a.det();
}

Rational partition_homogeneous_phi_route(const HomogParams& h, const Boundary& b) {
  if (h.x.is_zero())
    throw Error(Violation::PoleHit, "phi route undefined at x = 0");
  if ((h.x + h.c).is_zero())
    throw Error(Violation::PoleHit, "phi route undefined at x = -c");
  const TracePack t = require_traces(b);
  const WeightFns w(h.c);
  const std::size_t size = std::min(h.n, h.m);
  const std::size_t maxd = std::max(h.n, h.m);
  const long d = h.d();

  Matrix a(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      a.at(i, j) = phi_derivative(static_cast<std::size_t>(d) + i + j, h.x, t.beta, h.c);

  Rational fact(1);
  for (std::size_t k = 1; k <= size; ++k)
    fact *= identities::factorial(k - 1) *
            identities::factorial(static_cast<unsigned long>(d) + k - 1);

  const long nm = static_cast<long>(h.n) * static_cast<long>(h.m);
  Rational value = t.tb.pow(static_cast<long>(h.n)) * t.tc.pow(static_cast<long>(h.m)) /
                   (Rational(1) - t.beta).pow(static_cast<long>(size));
  value *= w.phi1(h.x).pow(nm).reciprocal();
  value *= h.c.pow(static_cast<long>(size) * (static_cast<long>(maxd) - 1));
  value /= fact;
  value *= a.det();
  if ((d * (static_cast<long>(maxd) + 1)) % 2 != 0) value = -value;
  return value;
}

FiniteThermo finite_thermodynamics(std::size_t n, std::size_t m, const Boundary& b,
                                   const BigFloat& eps, const BigFloat& k_t) {
  const mpfr_prec_t prec = std::max(eps.precision(), k_t.precision());
  const long min_nm = static_cast<long>(std::min(n, m));
  const long d = static_cast<long>(std::max(n, m)) - min_nm;

  const Rational tbc = b.trace_bc();
  if (tbc.sign() <= 0)
    throw Error(Violation::NonPositiveTrace, "ln tr(B C_hat) needs a positive trace");
  BigFloat bracket = BigFloat::of(min_nm, prec) * BigFloat::of(tbc, prec).log();
  if (d > 0) {
    const Rational side = n <= m ? b.trace_c_hat() : b.trace_b();
    if (side.sign() <= 0)
      throw Error(Violation::NonPositiveTrace, "boundary-trace log needs a positive trace");
    bracket = bracket + BigFloat::of(d, prec) * BigFloat::of(side, prec).log();
  }

  const BigFloat nm_eps =
      BigFloat::of(static_cast<long>(n) * static_cast<long>(m), prec) * eps;
  FiniteThermo out{
      /*f_tot=*/nm_eps - k_t * bracket,
      /*e_avg=*/nm_eps,
      /*e_fluct=*/BigFloat(prec),
      /*c_v=*/k_t * bracket,
      /*s=*/bracket,
  };
  return out;
}

}  // namespace mr6v::homog
