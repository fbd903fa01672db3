#pragma once

#include <cstddef>

#include "mr6v/bigfloat.hpp"
#include "mr6v/boundary.hpp"
#include "mr6v/rational.hpp"

namespace mr6v::thermo {

/// Hankel determinant tau of size `size` with entries phi_beta^{(d+i+j-2)}(x);
/// size 0 gives 1 (empty determinant).
Rational tau(std::size_t size, long d, const Rational& x, const Rational& beta,
             const Rational& c);

struct TauDerivatives {
  Rational value, first, second;
};

/// tau together with its first two x-derivatives, computed analytically by
/// shifting column derivative orders (exact, no difference quotients).
TauDerivatives tau_derivatives(std::size_t size, long d, const Rational& x,
                               const Rational& beta, const Rational& c);

/// Bilinear Toda identity in Hirota form at fixed d:
/// tau_{size+1} tau_{size-1} = tau tau'' - (tau')^2, exactly.
bool check_toda(std::size_t size, long d, const Rational& x, const Rational& beta,
                const Rational& c);

/// The x = 0 derivative identities of the homogeneous partition function:
/// exact differentiation of the polynomial Z(x)/Z^0 against the printed
/// closed forms of Z'(0)/Z^0 and Z''(0)/Z^0 in each d-class.
bool check_z_derivatives(std::size_t n, std::size_t m, const Boundary& b, const Rational& c);

/// beta_tilde = alpha^2 c^2 selected by d: 0 for d > 1, 3 beta for d = 1,
/// 3 beta (beta - 2) for d = 0.
Rational alpha_squared(long d, const Rational& beta);

enum class Regime { Positive, Zero, Negative };

/// The selected beta_tilde together with its sign regime, which picks the
/// sinh / flat / sin branch of the free energy.
struct FreeEnergySpec {
  Rational beta_tilde;
  Regime regime = Regime::Zero;

  static FreeEnergySpec select(long d, const Rational& beta);
  static FreeEnergySpec of(const Rational& beta_tilde);
};

/// Piecewise bulk free energy F~(x~) (units of kT): the sinh / flat / sin
/// branches by the sign of beta_tilde. For beta_tilde < 0 the domain is the
/// union of open intervals where sin(sqrt(-beta_tilde) x~) > 0; outside it
/// (and for x~ <= 0) DomainViolation is thrown.
BigFloat free_energy_tilde(const BigFloat& x_tilde, const Rational& beta_tilde);

struct InfiniteCharacteristics {
  BigFloat e_avg;       // kT x~ ln x~ dF~/dx~
  BigFloat e_fluct_sq;  // (kT)^2 x~ ln x~ ( (2 - ln x~) dF~/dx~ - x~ ln x~ d2F~/dx~2 )
  BigFloat s;           // -F~ + x~ ln x~ dF~/dx~
};

/// The infinite-lattice physical characteristics, with the F~ derivatives
/// taken from the analytic closed forms of the piecewise branches.
InfiniteCharacteristics infinite_characteristics(const BigFloat& x_tilde,
                                                 const Rational& beta_tilde,
                                                 const BigFloat& k_t);

/// One CSV sample of the infinite-lattice curves. in_domain is false where
/// F~ is undefined (the sin-branch exclusion intervals); such points keep
/// their grid slot but carry no values.
struct ThermoCurvePoint {
  BigFloat x_tilde;
  bool in_domain = false;
  BigFloat f_tilde, e_avg, e_fluct_sq, s;
};

ThermoCurvePoint curve_point(const BigFloat& x_tilde, const Rational& beta_tilde,
                             const BigFloat& k_t);

/// Z(x) / ( Z^0 (1+x/c)^{nm} ), exact: the factorized determinant whose
/// distance from 1 decays like (x/(x+c))^d in the semi-infinite limit. For
/// n = 1 this is 1 - beta (x/(x+c))^m.
Rational semi_infinite_ratio(std::size_t n, std::size_t m, const Rational& x,
                             const Rational& c, const Boundary& b);

}  // namespace mr6v::thermo
