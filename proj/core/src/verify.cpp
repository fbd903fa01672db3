#include "mr6v/verify.hpp"

#include <algorithm>
#include <functional>

#include "mr6v/formulas.hpp"
#include "mr6v/homogeneous.hpp"
#include "mr6v/identities.hpp"
#include "mr6v/oracle.hpp"
#include "mr6v/params.hpp"
#include "mr6v/rng.hpp"
#include "mr6v/thermo.hpp"

namespace mr6v::verify {

namespace {

/// Spectral parameters free of every determinant-route pole: parameters
/// pairwise distinct, u or v differences never equal to +-c, and u_i - v_j
/// never equal to -c.
InhomParams sample_params(RationalSampler& rng, std::size_t n, std::size_t m) {
  for (;;) {
    const Rational c = rng.nonzero_rational(6, 4);
    const std::vector<Rational> u = rng.distinct_rationals(n, {}, 10, 6);
    const std::vector<Rational> v = rng.distinct_rationals(m, u, 10, 6);
    InhomParams p(u, v, c);
    if (!p.all_distinct()) continue;
    bool ok = true;
    auto within_set = [&](std::span<const Rational> xs) {
      for (std::size_t i = 0; i < xs.size() && ok; ++i)
        for (std::size_t j = i + 1; j < xs.size() && ok; ++j)
          if ((xs[i] - xs[j]).abs() == c.abs()) ok = false;
    };
    within_set(p.u());
    within_set(p.v());
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j)
        if (p.u()[i] - p.v()[j] == -c) ok = false;
    if (ok) return p;
  }
}

/// Boundary with all three traces nonzero and beta != 1.
Boundary sample_boundary(RationalSampler& rng) {
  for (;;) {
    Boundary b({rng.rational(4, 3), rng.rational(4, 3)}, {rng.rational(4, 3), rng.rational(4, 3)},
               {rng.rational(4, 3), rng.rational(4, 3)}, {rng.rational(4, 3), rng.rational(4, 3)});
    if (b.trace_b().is_zero() || b.trace_c_hat().is_zero() || b.trace_bc().is_zero()) continue;
    if (b.beta().is_one()) continue;
    return b;
  }
}

SuiteResult run_suite(const std::string& name, const std::function<std::string()>& body) {
  SuiteResult r{name, false, ""};
  try {
    r.detail = body();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

std::string suite_formula_equivalence(RationalSampler& rng) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (int rep = 0; rep < 3; ++rep) {
        const InhomParams p = sample_params(rng, n, m);
        const Boundary b = sample_boundary(rng);
        const Rational z = oracle::partition_bruteforce(p, b);
        if (formulas::partition_block(p, b).value != z)
          return "block formula disagrees with the oracle";
        if (formulas::partition_mid(p, b, formulas::Method::MidK1).value != z)
          return "K1 route disagrees with the oracle";
        if (formulas::partition_mid(p, b, formulas::Method::MidK2).value != z)
          return "K2 route disagrees with the oracle";
        if (n == m && formulas::partition_mid(p, b, formulas::Method::MidK3).value != z)
          return "K3 route disagrees with the oracle";
      }
    }
  }
  return "";
}

std::string suite_cauchy(RationalSampler& rng) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (int shifted = 0; shifted <= 1; ++shifted) {
        const InhomParams p = sample_params(rng, n, m);
        identities::PartialCauchy pc{{p.u().begin(), p.u().end()},
                                     {p.v().begin(), p.v().end()},
                                     p.c(),
                                     shifted != 0};
        const Matrix mat = identities::assemble(pc);
        if (mat.det() != identities::partial_cauchy_det(pc))
          return "assembled determinant differs from the closed form";
        if (!(mat * identities::partial_cauchy_inverse(pc)).is_identity())
          return "closed-form inverse is not a right inverse";
        if (!(identities::partial_cauchy_inverse(pc) * mat).is_identity())
          return "closed-form inverse is not a left inverse";
      }
    }
  }
  return "";
}

std::string suite_binomial(RationalSampler& rng, bool inject_fault) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (long d = 0; d <= 5; ++d) {
      Matrix m = identities::binomial_matrix(n, d);
      if (inject_fault && n == 4 && d == 2) m.at(1, 2) += Rational(1);
      if (!m.det().is_one()) return "det(M_n(d)) != 1";
    }
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (long d = 0; d <= 3; ++d) {
      const Matrix m = identities::binomial_matrix(n, d);
      for (long k = 1; k <= static_cast<long>(n); ++k) {
        for (long l = 1; l <= static_cast<long>(n); ++l) {
          Matrix sub(n - 1, n - 1);
          for (std::size_t i = 0, r = 0; i < n; ++i) {
            if (i + 1 == static_cast<std::size_t>(k)) continue;
            for (std::size_t j = 0, s = 0; j < n; ++j) {
              if (j + 1 == static_cast<std::size_t>(l)) continue;
              sub.at(r, s) = m.at(i, j);
              ++s;
            }
            ++r;
          }
          if (identities::binomial_minor(n, d, k, l) != sub.det())
            return "closed-form minor differs from the deletion determinant";
        }
      }
    }
  }
  for (long n = 1; n <= 8; ++n) {
    if (identities::binomial_minor(n, 0, 1, 1) != Rational(n)) return "D^(1,1)(0) != n";
    if (identities::binomial_minor(n, 0, 2, 1) != Rational(n) * Rational(n - 1) / Rational(2))
      return "D^(2,1)(0) != n(n-1)/2";
    if (identities::binomial_minor(n, 1, 1, 1) != Rational(n) * Rational(n + 1) / Rational(2))
      return "D^(1,1)(1) != n(n+1)/2";
  }
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    const long d = rng.uniform(0, 4);
    const long k = rng.uniform(2, static_cast<long>(n));
    const long l = rng.uniform(-1, static_cast<long>(n) + 1);
    if (!identities::check_minor_recurrence(n, d, k, l)) return "minor recurrence fails";
    if (!identities::check_minor_expansion(n, d, rng.uniform(1, static_cast<long>(n)), l))
      return "minor expansion fails";
  }
  return "";
}

std::string suite_symmetric(RationalSampler& rng) {
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t count = static_cast<std::size_t>(rng.uniform(1, 6));
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < count; ++i) xs.push_back(rng.rational(8, 5));
    for (std::size_t n = 1; n <= 5; ++n)
      if (!identities::check_eh_identity(n, xs)) return "alternating e/h sum is nonzero";
    // Generating function: coefficients of prod (1 + x_i t) are the e_r.
    Polynomial gen = Polynomial::constant(Rational(1));
    for (const auto& x : xs)
      gen = gen * Polynomial(std::vector<Rational>{Rational(1), x});
    for (std::size_t r = 0; r <= count + 1; ++r)
      if (gen.coeff(r) != identities::elementary_symmetric(r, xs))
        return "generating-function coefficient differs from e_r";
  }
  return "";
}

std::string suite_vandermonde(RationalSampler& rng) {
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t count = static_cast<std::size_t>(rng.uniform(1, 5));
    const std::vector<Rational> xs = rng.distinct_rationals(count, {}, 10, 6);
    const Matrix v = identities::vandermonde_matrix(xs);
    const Matrix inv = identities::vandermonde_inverse(xs);
    if (!(v * inv).is_identity() || !(inv * v).is_identity())
      return "closed-form Vandermonde inverse fails";
  }
  return "";
}

std::string suite_residue(RationalSampler& rng) {
  for (int rep = 0; rep < 12; ++rep) {
    const std::size_t n_poles = static_cast<std::size_t>(rng.uniform(2, 7));
    const std::size_t n_roots =
        static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n_poles) - 2));
    const std::vector<Rational> poles = rng.distinct_rationals(n_poles, {}, 10, 6);
    std::vector<Rational> roots;
    for (std::size_t i = 0; i < n_roots; ++i) roots.push_back(rng.rational(10, 6));
    if (!identities::residue_sum(poles, roots, rng.nonzero_rational(5, 3)).is_zero())
      return "residue sum of a proper rational function is nonzero";
  }
  return "";
}

std::string suite_toda(RationalSampler& rng) {
  for (std::size_t size = 1; size <= 4; ++size) {
    for (long d = 0; d <= 2; ++d) {
      for (int rep = 0; rep < 5; ++rep) {
        const Rational c = rng.nonzero_rational(5, 3);
        Rational x = rng.nonzero_rational(8, 5);
        while (x.is_zero() || (x + c).is_zero()) x = rng.nonzero_rational(8, 5);
        if (!thermo::check_toda(size, d, x, rng.rational(5, 3), c))
          return "Toda identity fails";
      }
    }
  }
  return "";
}

std::string suite_derivatives(RationalSampler& rng) {
  for (long d = 0; d <= 2; ++d) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const Boundary b = sample_boundary(rng);
      const Rational c = rng.nonzero_rational(5, 3);
      if (!thermo::check_z_derivatives(n, n + static_cast<std::size_t>(d), b, c))
        return "Z derivative identity fails";
    }
  }
  return "";
}

std::string suite_pdwbc(RationalSampler& rng) {
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 2}, {2, 3}, {2, 4}};
  for (const auto& [n, m] : shapes) {
    const InhomParams p = sample_params(rng, n, m);
    const Vec2 north{rng.nonzero_rational(4, 3), rng.nonzero_rational(4, 3)};
    const Vec2 south{rng.nonzero_rational(4, 3), rng.nonzero_rational(4, 3)};
    if (!formulas::check_pdwbc_expansion(p, north, south))
      return "partial-DWBC expansion fails";
  }
  return "";
}

std::string suite_yang_baxter(RationalSampler& rng) {
  for (int rep = 0; rep < 100; ++rep) {
    if (!oracle::check_yang_baxter(rng.rational(), rng.rational(), rng.rational(),
                                   rng.nonzero_rational()))
      return "Yang-Baxter equation fails";
  }
  return "";
}

std::string suite_rectangle_limit(RationalSampler& rng) {
  const std::vector<Rational> magnitudes = {Rational(100), Rational(10000), Rational(1000000)};
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 2}, {2, 3}, {3, 2}};
  for (const auto& [n, m] : shapes) {
    const InhomParams p = sample_params(rng, n, m);
    const Boundary b = sample_boundary(rng);
    const auto diffs = oracle::check_rectangle_limit(p, b, magnitudes);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      if (!(diffs[i + 1].abs() < diffs[i].abs()))
        return "padded-square differences do not shrink";
  }
  // No padding: the difference is exactly zero.
  const InhomParams sq = sample_params(rng, 2, 2);
  const Boundary b = sample_boundary(rng);
  for (const auto& diff : oracle::check_rectangle_limit(sq, b, magnitudes))
    if (!diff.is_zero()) return "square case should yield exact zeros";
  return "";
}

std::string suite_semi_infinite(RationalSampler&) {
  // n = 2, x = c = 1, boundary of the worked example (beta = -1/2): the gaps
  // |ratio - 1| shrink and successive-gap ratios approach x/(x+c) = 1/2.
  const Boundary b({Rational(1), Rational(2)}, {Rational(1), Rational(1)},
                   {Rational(1), Rational(0)}, {Rational(1), Rational(1)});
  const Rational one(1);
  std::vector<Rational> gaps;
  for (std::size_t m = 4; m <= 12; ++m)
    gaps.push_back((thermo::semi_infinite_ratio(2, m, one, one, b) - one).abs());
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
    if (!(gaps[i + 1] < gaps[i])) return "gaps are not decreasing";
  for (std::size_t m = 8; m + 1 <= 12; ++m) {
    const Rational ratio = gaps[m + 1 - 4] / gaps[m - 4];
    if ((ratio - Rational(1, 2)).abs() > Rational(1, 20))
      return "gap ratio strays more than 10% from 1/2 at m = " + std::to_string(m);
  }
  return "";
}

}  // namespace

std::vector<SuiteResult> run_all(const Options& options) {
  RationalSampler rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(run_suite("formula-equivalence",
                          [&] { return suite_formula_equivalence(rng); }));
  out.push_back(run_suite("cauchy", [&] { return suite_cauchy(rng); }));
  out.push_back(run_suite(
      "binomial", [&] { return suite_binomial(rng, options.inject_binomial_fault); }));
  out.push_back(run_suite("symmetric", [&] { return suite_symmetric(rng); }));
  out.push_back(run_suite("vandermonde", [&] { return suite_vandermonde(rng); }));
  out.push_back(run_suite("residue", [&] { return suite_residue(rng); }));
  out.push_back(run_suite("toda", [&] { return suite_toda(rng); }));
  out.push_back(run_suite("derivatives", [&] { return suite_derivatives(rng); }));
  out.push_back(run_suite("pdwbc", [&] { return suite_pdwbc(rng); }));
  out.push_back(run_suite("yang-baxter", [&] { return suite_yang_baxter(rng); }));
  out.push_back(run_suite("rectangle-limit", [&] { return suite_rectangle_limit(rng); }));
  out.push_back(run_suite("semi-infinite", [&] { return suite_semi_infinite(rng); }));
  return out;
}

std::vector<SuiteResult> run_identities(const Options& options) {
  RationalSampler rng(options.seed);
  std::vector<SuiteResult> out;
  out.push_back(run_suite("cauchy", [&] { return suite_cauchy(rng); }));
  out.push_back(run_suite(
      "binomial", [&] { return suite_binomial(rng, options.inject_binomial_fault); }));
  out.push_back(run_suite("symmetric", [&] { return suite_symmetric(rng); }));
  out.push_back(run_suite("vandermonde", [&] { return suite_vandermonde(rng); }));
  out.push_back(run_suite("residue", [&] { return suite_residue(rng); }));
  return out;
}

}  // namespace mr6v::verify
