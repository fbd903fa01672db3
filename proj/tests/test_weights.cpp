#include <doctest.h>

#include <vector>

#include "mr6v/identities.hpp"
#include "mr6v/rng.hpp"
#include "mr6v/weights.hpp"

using namespace mr6v;

TEST_CASE("f = g + 1 = g h away from u = v") {
  RationalSampler rng(83);
  for (int rep = 0; rep < 50; ++rep) {
    const WeightFns w(rng.nonzero_rational(6, 4));
    const Rational u = rng.rational(10, 6);
    Rational v = rng.rational(10, 6);
    while (v == u) v = rng.rational(10, 6);
    CHECK(w.f(u, v) == w.g(u, v) + Rational(1));
    CHECK(w.f(u, v) == w.g(u, v) * w.h(u, v));
  }
}

TEST_CASE("h at coincident arguments is 1") {
  const WeightFns w(Rational(7, 3));
  CHECK(w.h(Rational(2, 5), Rational(2, 5)) == Rational(1));
}

TEST_CASE("phi and psi closed forms") {
  const WeightFns w(Rational(2));
  // phi_beta(x) = c/x - beta c/(x+c) at x = 1, beta = 1/2: 2 - 1/3
  CHECK(w.phi(Rational(1), Rational(1, 2)) == Rational(5, 3));
  // phi_1(x) = c^2/(x(x+c))
  CHECK(w.phi1(Rational(1)) == Rational(4, 3));
  CHECK(w.psi(Rational(3), 2) == Rational(9, 4));
  CHECK(w.psi(Rational(3), 0) == Rational(1));
  CHECK(w.psi(Rational(-4), 3) == Rational(8));
}

TEST_CASE("pole guards") {
  const WeightFns w(Rational(1));
  CHECK_THROWS_AS(w.g(Rational(2), Rational(2)), Error);
  CHECK_THROWS_AS(w.phi(Rational(0), Rational(1)), Error);
  CHECK_THROWS_AS(w.phi(Rational(-1), Rational(1)), Error);
  CHECK_THROWS_AS(WeightFns(Rational(0)), Error);
}

TEST_CASE("Delta products match Vandermonde determinants") {
  RationalSampler rng(89);
  const WeightFns w(rng.nonzero_rational(6, 4));
  const std::vector<Rational> xs = rng.distinct_rationals(4, {}, 10, 6);
  // det V(x) = prod_{i<j}(x_j - x_i) = Delta(x) c^{N(N-1)/2}
  const Rational det = identities::vandermonde_matrix(xs).det();
  CHECK(det == w.vandermonde(xs) * w.c().pow(6));
  CHECK(w.vandermonde_prime(xs) * w.c().pow(6) ==
        (xs.size() * (xs.size() - 1) / 2 % 2 == 0 ? det : -det));
}
