// Acceptance suite: one criterion per line, PASS/FAIL, exit 0 only if every
// criterion holds. Each check pins its sizes, instance counts and tolerances
// in code; the randomized criteria run from a fixed seed so the suite is
// reproducible byte for byte.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mr6v/formulas.hpp"
#include "mr6v/homogeneous.hpp"
#include "mr6v/identities.hpp"
#include "mr6v/matrix.hpp"
#include "mr6v/oracle.hpp"
#include "mr6v/rng.hpp"
#include "mr6v/thermo.hpp"
#include "test_support.hpp"

using namespace mr6v;
using formulas::Method;
using mr6v_test::sample_boundary;
using mr6v_test::sample_params;
using mr6v_test::worked_boundary;
using mr6v_test::worked_params;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

Rational sample_x(RationalSampler& rng, const Rational& c) {
  for (;;) {
    const Rational x = rng.rational(8, 5);
    if (!x.is_zero() && !(x + c).is_zero()) return x;
  }
}

// 1. bruteforce = block = K1 = K2 on 60 random instances spanning n,m <= 3.
Check criterion_formula_equivalence() {
  Check c;
  RationalSampler rng(1001);
  const auto t0 = std::chrono::steady_clock::now();
  int instance = 0;
  while (instance < 60) {
    const std::size_t n = 1 + static_cast<std::size_t>(instance % 3);
    const std::size_t m = 1 + static_cast<std::size_t>((instance / 3) % 3);
    const InhomParams p = sample_params(rng, n, m);
    const Boundary b = sample_boundary(rng);
    const Rational z = oracle::partition_bruteforce(p, b);
    c.expect(formulas::partition_block(p, b).value == z, "block != oracle");
    c.expect(formulas::partition_mid(p, b, Method::MidK1).value == z, "K1 != oracle");
    c.expect(formulas::partition_mid(p, b, Method::MidK2).value == z, "K2 != oracle");
    ++instance;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 10.0, "exceeded the 10 s budget");
  return c;
}

// 2. K3 route equals K1 route on 20 random square instances, n = m <= 4.
Check criterion_square_k3() {
  Check c;
  RationalSampler rng(1002);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const InhomParams p = sample_params(rng, n, n);
    const Boundary b = sample_boundary(rng);
    c.expect(formulas::partition_mid(p, b, Method::MidK3).value ==
                 formulas::partition_mid(p, b, Method::MidK1).value,
             "K3 route != K1 route");
  }
  return c;
}

// 3. The worked 1x1 instance yields Z = 5 by every method.
Check criterion_worked_instance() {
  Check c;
  const InhomParams p = worked_params();
  const Boundary b = worked_boundary();
  const Rational five(5);
  c.expect(oracle::partition_bruteforce(p, b) == five, "bruteforce != 5");
  c.expect(formulas::partition_block(p, b).value == five, "block != 5");
  c.expect(formulas::partition_mid(p, b, Method::MidK1).value == five, "K1 != 5");
  c.expect(formulas::partition_mid(p, b, Method::MidK2).value == five, "K2 != 5");
  c.expect(formulas::partition_mid(p, b, Method::MidK3).value == five, "K3 != 5");
  return c;
}

// 4. Partial Cauchy determinant and inverse, all n,m <= 5, 10 instances each.
Check criterion_partial_cauchy() {
  Check c;
  RationalSampler rng(1004);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) {
      for (int rep = 0; rep < 10; ++rep) {
        const InhomParams p = sample_params(rng, n, m);
        const identities::PartialCauchy pc{
            {p.u().begin(), p.u().end()}, {p.v().begin(), p.v().end()}, p.c(), false};
        const Matrix mat = identities::assemble(pc);
        c.expect(mat.det() == identities::partial_cauchy_det(pc), "det != closed form");
        const Matrix inv = identities::partial_cauchy_inverse(pc);
        c.expect((inv * mat).is_identity(), "inverse * matrix != identity");
        c.expect((mat * inv).is_identity(), "matrix * inverse != identity");
      }
    }
  }
  return c;
}

// 5. Binomial determinants, deletion minors and the printed special values.
Check criterion_binomial() {
  Check c;
  for (std::size_t n = 1; n <= 8; ++n)
    for (long d = 0; d <= 5; ++d)
      c.expect(identities::binomial_matrix(n, d).det() == Rational(1), "det(M_n(d)) != 1");

  for (std::size_t n = 1; n <= 6; ++n) {
    for (long d = 0; d <= 4; ++d) {
      const Matrix m = identities::binomial_matrix(n, d);
      for (long k = 1; k <= static_cast<long>(n); ++k) {
        for (long l = 1; l <= static_cast<long>(n); ++l) {
          Matrix sub(n - 1, n - 1);
          for (std::size_t i = 0, r = 0; i < n; ++i) {
            if (i + 1 == static_cast<std::size_t>(k)) continue;
            for (std::size_t j = 0, s = 0; j < n; ++j) {
              if (j + 1 == static_cast<std::size_t>(l)) continue;
              sub.at(r, s++) = m.at(i, j);
            }
            ++r;
          }
          c.expect(identities::binomial_minor(n, d, k, l) == sub.det(),
                   "minor closed form != deletion determinant");
        }
      }
    }
  }

  for (long n = 1; n <= 8; ++n) {
    c.expect(identities::binomial_minor(n, 0, 1, 1) == Rational(n), "D(1,1)(0) != n");
    c.expect(identities::binomial_minor(n, 0, 2, 1) == Rational(n * (n - 1) / 2),
             "D(2,1)(0) != n(n-1)/2");
    c.expect(identities::binomial_minor(n, 1, 1, 1) == Rational(n * (n + 1) / 2),
             "D(1,1)(1) != n(n+1)/2");
  }
  return c;
}

// 6. Homogeneous determinant equals the oracle at coincident parameters,
//    n,m <= 4, 20 random boundaries.
Check criterion_homogeneous() {
  Check c;
  RationalSampler rng(1006);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const std::size_t m = 1 + static_cast<std::size_t>((i / 4) % 4);
    const Boundary b = sample_boundary(rng);
    const Rational cc = rng.nonzero_rational(5, 3);
    const Rational x = sample_x(rng, cc);
    const homog::HomogParams hp{x, cc, n, m};
    const InhomParams coincident(std::vector<Rational>(n, x),
                                 std::vector<Rational>(m, Rational(0)), cc);
    c.expect(homog::partition_homogeneous(hp, b) == oracle::partition_bruteforce(coincident, b),
             "homogeneous value != oracle at coincident parameters");
  }
  return c;
}

// 7. Toda identity, sizes <= 4, d in {0,1,2}, 5 rational x samples each.
Check criterion_toda() {
  Check c;
  RationalSampler rng(1007);
  for (std::size_t size = 1; size <= 4; ++size) {
    for (long d = 0; d <= 2; ++d) {
      for (int rep = 0; rep < 5; ++rep) {
        const Rational cc = rng.nonzero_rational(4, 3);
        const Rational x = sample_x(rng, cc);
        c.expect(thermo::check_toda(size, d, x, rng.rational(4, 3), cc), "Toda identity fails");
      }
    }
  }
  return c;
}

// 8. Appendix derivative identities, n <= 5 in each d-class.
Check criterion_derivatives() {
  Check c;
  RationalSampler rng(1008);
  for (long d : {0L, 1L, 2L}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const Boundary b = sample_boundary(rng);
      const Rational cc = rng.nonzero_rational(5, 3);
      c.expect(thermo::check_z_derivatives(n, n + static_cast<std::size_t>(d), b, cc),
               "Z'(0)/Z''(0) closed forms fail at d = " + std::to_string(d));
    }
  }
  return c;
}

// 9. Semi-infinite decay rate: n = 2, x = c = 1, m = 4..12; successive-gap
//    ratios within 10% of x/(x+c) = 1/2 for m >= 8.
Check criterion_semi_infinite() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const Boundary b = worked_boundary();
  std::vector<Rational> gaps;
  for (std::size_t m = 4; m <= 12; ++m)
    gaps.push_back(
        (thermo::semi_infinite_ratio(2, m, Rational(1), Rational(1), b) - Rational(1)).abs());
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
    c.expect(gaps[i + 1] < gaps[i], "gaps fail to decrease");
  for (std::size_t m = 8; m <= 11; ++m) {
    const Rational ratio = gaps[m + 1 - 4] / gaps[m - 4];
    c.expect((ratio - Rational(1, 2)).abs() <= Rational(1, 20),
             "gap ratio off by more than 10% at m = " + std::to_string(m));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 30.0, "exceeded the 30 s budget");
  return c;
}

// 10. Partial-DWBC expansion for (n,m) in {(1,2),(2,3),(2,4)}.
Check criterion_pdwbc() {
  Check c;
  RationalSampler rng(1010);
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 2}, {2, 3}, {2, 4}};
  for (const auto& [n, m] : shapes) {
    for (int rep = 0; rep < 5; ++rep) {
      const InhomParams p = sample_params(rng, n, m);
      const Vec2 north{rng.nonzero_rational(4, 3), rng.nonzero_rational(4, 3)};
      const Vec2 south{rng.nonzero_rational(4, 3), rng.nonzero_rational(4, 3)};
      c.expect(formulas::check_pdwbc_expansion(p, north, south), "expansion fails");
    }
  }
  return c;
}

// 11. Yang-Baxter on 100 random rational triples.
Check criterion_yang_baxter() {
  Check c;
  RationalSampler rng(1011);
  for (int i = 0; i < 100; ++i)
    c.expect(oracle::check_yang_baxter(rng.rational(), rng.rational(), rng.rational(),
                                       rng.nonzero_rational()),
             "Yang-Baxter fails");
  return c;
}

// 12. Infinite-lattice curves: beta~ = 0 closed forms vs the generic path to
//     1e-12 on a 50-point grid; beta~-continuity at 0 within 1e-6; and the
//     d = 0 bulk trend, gap to ln(alpha x (x+c)/(c sinh(alpha x))) strictly
//     shrinking up to n = 12.
Check criterion_curves() {
  Check c;
  const BigFloat kt = BigFloat::of(1L);
  const BigFloat one = BigFloat::of(1L);
  const BigFloat tol12 = BigFloat::of(Rational(1, 10).pow(12));
  for (int i = 1; i <= 50; ++i) {
    const BigFloat x = BigFloat::of(Rational(6 * i, 100));
    const auto ch = thermo::infinite_characteristics(x, Rational(0), kt);
    const BigFloat lx = x.log();
    const BigFloat e_expect = -(x * lx) / (one + x);
    const BigFloat ef_expect =
        -(x * lx) * (BigFloat::of(2L) + BigFloat::of(2L) * x - lx) / ((one + x) * (one + x));
    const BigFloat s_expect = -(x * lx) / (one + x) + (one + x).log();
    c.expect((ch.e_avg - e_expect).abs() < tol12, "E closed form off at beta~ = 0");
    c.expect((ch.e_fluct_sq - ef_expect).abs() < tol12, "dE^2 closed form off at beta~ = 0");
    c.expect((ch.s - s_expect).abs() < tol12, "S closed form off at beta~ = 0");
  }

  const BigFloat tol6 = BigFloat::of(Rational(1, 10).pow(6));
  for (int i = 1; i <= 30; ++i) {
    const BigFloat x = BigFloat::of(Rational(i, 10));
    const BigFloat gap = (thermo::free_energy_tilde(x, Rational(1, 100000000)) -
                          thermo::free_energy_tilde(x, Rational(0)))
                             .abs();
    c.expect(gap < tol6, "free energy not continuous in beta~ at 0");
  }

  // Bulk trend at beta = -1 (alpha = 3/c), x = c = 1, n up to 12.
  const Boundary b({Rational(1), Rational(0)}, {Rational(1), Rational(0)},
                   {Rational(1), Rational(1)}, {Rational(1), Rational(1)});
  if (b.beta() != Rational(-1)) {
    c.fail("bulk boundary must have beta = -1");
    return c;
  }
  const mpfr_prec_t bits = 256;
  const BigFloat target = (BigFloat::of(6L, bits) / BigFloat::of(3L, bits).sinh()).log();
  BigFloat prev_gap;
  bool first = true;
  for (std::size_t n = 2; n <= 12; ++n) {
    const Rational det = thermo::semi_infinite_ratio(n, n, Rational(1), Rational(1), b);
    if (det.sign() <= 0) {
      c.fail("bulk determinant must stay positive");
      break;
    }
    const long nn = static_cast<long>(n);
    const BigFloat lnz = BigFloat::of(2L, bits).log() * BigFloat::of(nn * nn, bits) +
                         BigFloat::of(det, bits).log();
    const BigFloat gap = (lnz / BigFloat::of(nn * nn, bits) - target).abs();
    if (!first) c.expect(gap < prev_gap, "bulk gap fails to shrink at n = " + std::to_string(n));
    prev_gap = gap;
    first = false;
  }
  return c;
}

struct Criterion {
  std::string name;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"formula-equivalence", criterion_formula_equivalence},
      {"square-case-k3", criterion_square_k3},
      {"worked-instance", criterion_worked_instance},
      {"partial-cauchy", criterion_partial_cauchy},
      {"binomial-determinants", criterion_binomial},
      {"homogeneous-consistency", criterion_homogeneous},
      {"toda-identity", criterion_toda},
      {"derivative-identities", criterion_derivatives},
      {"semi-infinite-rate", criterion_semi_infinite},
      {"pdwbc-expansion", criterion_pdwbc},
      {"yang-baxter", criterion_yang_baxter},
      {"infinite-lattice-curves", criterion_curves},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %2zu %s%s%s\n", result.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), result.ok ? "" : " -- ",
                result.ok ? "" : result.detail.c_str());
    all_ok = all_ok && result.ok;
  }
  return all_ok ? 0 : 1;
}
