#pragma once

#include <cstddef>

#include "mr6v/bigfloat.hpp"
#include "mr6v/boundary.hpp"
#include "mr6v/polynomial.hpp"
#include "mr6v/rational.hpp"

namespace mr6v::homog {

/// Homogeneous lattice: every vertex carries the same x = u - v.
struct HomogParams {
  Rational x;
  Rational c;
  std::size_t n = 1, m = 1;

  long d() const {
    return n >= m ? static_cast<long>(n - m) : static_cast<long>(m - n);
  }
};

/// phi_beta^{(k)}(x) = (-1)^k k! ( c/x^{k+1} - beta c/(x+c)^{k+1} ), exact.
Rational phi_derivative(std::size_t k, const Rational& x, const Rational& beta,
                        const Rational& c);

/// The completely homogeneous value Z^0 = tr(B)^n tr(C_hat)^m / (1-beta)^min,
/// computed through both printed forms (trace powers and the tr(B C_hat)
/// power form) and checked against itself.
Rational z0(std::size_t n, std::size_t m, const Boundary& b);

/// Z(x)/Z^0 as an exact polynomial in x: the min(n,m)-sized determinant with
/// entries C(d+i+j-2, i-1) ( (1+x/c)^{d+i+j-1} - beta (x/c)^{d+i+j-1} ).
Polynomial z_over_z0_polynomial(std::size_t n, std::size_t m, const Rational& c,
                                const Rational& beta);

/// Canonical evaluation route: the binomial determinant, polynomial in x, so
/// x = 0 is fine. x = -c is rejected (zero a-weight).
Rational partition_homogeneous(const HomogParams& h, const Boundary& b);

/// Cross-check route through the phi-derivative determinants; valid for
/// x not in {0, -c}.
Rational partition_homogeneous_phi_route(const HomogParams& h, const Boundary& b);

/// Finite-lattice thermodynamics with physical weights a = x+c, b = x,
/// c = exp(-eps/kT), evaluated at the completely homogeneous point x = 0
/// (energies in units with k_B = 1).
struct FiniteThermo {
  BigFloat f_tot;     // nm eps - kT (min ln tr(BC) + d ln tr(C or B))
  BigFloat e_avg;     // nm eps
  BigFloat e_fluct;   // 0
  BigFloat c_v;       // kT (min ln tr(BC) + d ln tr(C or B)), as printed
  BigFloat s;         // min ln tr(BC) + d ln tr(C or B)
};

FiniteThermo finite_thermodynamics(std::size_t n, std::size_t m, const Boundary& b,
                                   const BigFloat& eps, const BigFloat& k_t);

}  // namespace mr6v::homog
