#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "mr6v/formulas.hpp"
#include "mr6v/oracle.hpp"
#include "mr6v/polynomial.hpp"
#include "mr6v/rng.hpp"
#include "test_support.hpp"

using namespace mr6v;
using mr6v_test::sample_boundary;
using mr6v_test::sample_params;
using mr6v_test::worked_boundary;
using mr6v_test::worked_params;

TEST_CASE("r_matrix at u = v is the permutation matrix") {
  const Matrix r = oracle::r_matrix(Rational(2, 3), Rational(2, 3), Rational(5));
  Matrix p(4, 4);
  p.at(0, 0) = p.at(1, 2) = p.at(2, 1) = p.at(3, 3) = Rational(1);
  CHECK(r == p);
}

TEST_CASE("r_matrix at u - v = c with c = 1") {
  const Matrix r = oracle::r_matrix(Rational(1), Rational(0), Rational(1));
  const long expect[4][4] = {{2, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(r.at(i, j) == Rational(expect[i][j]));
}

TEST_CASE("r_matrix generic entries") {
  // u = 3, v = 1, c = 2: h = (u-v+c)/c = 2, b = (u-v)/c = 1.
  const Matrix r = oracle::r_matrix(Rational(3), Rational(1), Rational(2));
  CHECK(r.at(0, 0) == Rational(2));
  CHECK(r.at(1, 1) == Rational(1));
  CHECK(r.at(1, 2) == Rational(1));
  CHECK(r.at(2, 1) == Rational(1));
  CHECK(r.at(2, 2) == Rational(1));
  CHECK(r.at(3, 3) == Rational(2));
  CHECK(r.at(0, 1) == Rational(0));
}

TEST_CASE("r_matrix rejects c = 0") {
  try {
    oracle::r_matrix(Rational(1), Rational(0), Rational(0));
    FAIL("expected ZeroCrossing");
  } catch (const Error& e) {
    CHECK(e.code() == Violation::ZeroCrossing);
  }
}

TEST_CASE("Yang-Baxter holds at coincident and generic points") {
  CHECK(oracle::check_yang_baxter(Rational(2), Rational(2), Rational(2), Rational(1)));
  CHECK(oracle::check_yang_baxter(Rational(1), Rational(2), Rational(5), Rational(3)));
}

TEST_CASE("Yang-Baxter holds on 100 random rational triples") {
  RationalSampler rng(101);
  for (int i = 0; i < 100; ++i) {
    CHECK(oracle::check_yang_baxter(rng.rational(), rng.rational(), rng.rational(),
                                    rng.nonzero_rational()));
  }
}

TEST_CASE("worked 1x1 instance contracts to 5") {
  CHECK(oracle::partition_bruteforce(worked_params(), worked_boundary()) == Rational(5));
}

TEST_CASE("1x1 all-up boundary keeps only the a-weight") {
  const Vec2 up{Rational(1), Rational(0)};
  const Boundary b(up, up, up, up);
  const InhomParams p({Rational(5, 3)}, {Rational(1, 2)}, Rational(2));
  // only the all-up configuration survives, weight (u - v + c)/c = 19/12
  CHECK(oracle::partition_bruteforce(p, b) == Rational(19, 12));
}

TEST_CASE("zero east boundary annihilates the state") {
  RationalSampler rng(5);
  const InhomParams p = sample_params(rng, 2, 3);
  const Boundary b({Rational(1), Rational(2)}, {Rational(3), Rational(1)},
                   {Rational(0), Rational(0)}, {Rational(1), Rational(1)});
  CHECK(oracle::partition_bruteforce(p, b) == Rational(0));
}

TEST_CASE("1x1 oracle equals the hand-expanded single vertex") {
  RationalSampler rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const InhomParams p = sample_params(rng, 1, 1);
    const Boundary b = sample_boundary(rng);
    const Matrix r = oracle::r_matrix(p.u()[0], p.v()[0], p.c());
    // <w| (x) <n| R |e> (x) |s> over the 2x2 tensor basis.
    Rational expect;
    const Rational wvec[2] = {b.west().up, b.west().down};
    const Rational nvec[2] = {b.north().up, b.north().down};
    const Rational evec[2] = {b.east().up, b.east().down};
    const Rational svec[2] = {b.south().up, b.south().down};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            expect += wvec[i] * nvec[j] * r.at(2 * i + j, 2 * k + l) * evec[k] * svec[l];
    CHECK(oracle::partition_bruteforce(p, b) == expect);
  }
}

namespace {

/// Independent oracle: the raw statistical sum over every edge-state
/// assignment. Row line i starts at |e> on its column-m end, crosses columns
/// m..1 and exits into <w|; column line j starts at |s> below row n, crosses
/// rows n..1 and exits into <n|. Each vertex contributes the R-matrix
/// element <a_out b_out| R |a_in b_in>. Exponential in the edge count, so
/// lattices here stay tiny.
Rational configuration_sum(const InhomParams& p, const Boundary& b) {
  const std::size_t n = p.n(), m = p.m();
  const std::size_t h_edges = n * (m + 1);
  const std::size_t v_edges = (n + 1) * m;
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      r.push_back(oracle::r_matrix(p.u()[i], p.v()[j], p.c()));

  auto comp = [](const Vec2& v, int bit) { return bit ? v.down : v.up; };
  Rational total;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (h_edges + v_edges)); ++mask) {
    auto h_at = [&](std::size_t i, std::size_t j) {  // j in [0, m]
      return static_cast<int>((mask >> (i * (m + 1) + j)) & 1);
    };
    auto v_at = [&](std::size_t i, std::size_t j) {  // i in [0, n]
      return static_cast<int>((mask >> (h_edges + i * m + j)) & 1);
    };
    Rational weight(1);
    for (std::size_t i = 0; i < n && !weight.is_zero(); ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const int a_in = h_at(i, j + 1), b_in = v_at(i + 1, j);
        const int a_out = h_at(i, j), b_out = v_at(i, j);
        weight *= r[i * m + j].at(2 * a_out + b_out, 2 * a_in + b_in);
        if (weight.is_zero()) break;
      }
    }
    if (weight.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      weight *= comp(b.east(), h_at(i, m)) * comp(b.west(), h_at(i, 0));
    for (std::size_t j = 0; j < m; ++j)
      weight *= comp(b.south(), v_at(n, j)) * comp(b.north(), v_at(0, j));
    total += weight;
  }
  return total;
}

}  // namespace

TEST_CASE("column contraction equals the raw configuration sum") {
  RationalSampler rng(73);
  for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}}) {
    const InhomParams p = sample_params(rng, n, m);
    const Boundary b = sample_boundary(rng);
    CHECK(oracle::partition_bruteforce(p, b) == configuration_sum(p, b));
  }
}

TEST_CASE("Z is symmetric under permutations of u and of v") {
  RationalSampler rng(37);
  for (int rep = 0; rep < 10; ++rep) {
    const InhomParams p = sample_params(rng, 2, 3);
    const Boundary b = sample_boundary(rng);
    const Rational z = oracle::partition_bruteforce(p, b);

    std::vector<Rational> u(p.u().begin(), p.u().end());
    std::vector<Rational> v(p.v().begin(), p.v().end());
    std::swap(u[0], u[1]);
    CHECK(oracle::partition_bruteforce(InhomParams(u, v, p.c()), b) == z);
    std::rotate(v.begin(), v.begin() + 1, v.end());
    CHECK(oracle::partition_bruteforce(InhomParams(u, v, p.c()), b) == z);
  }
}

TEST_CASE("Z is multilinear in the east boundary vector") {
  RationalSampler rng(41);
  const InhomParams p = sample_params(rng, 3, 2);
  const Boundary b = sample_boundary(rng);
  const Rational z = oracle::partition_bruteforce(p, b);
  const Rational lambda(7, 5);
  const Boundary scaled(b.north(), b.south(),
                        {b.east().up * lambda, b.east().down * lambda}, b.west());
  CHECK(oracle::partition_bruteforce(p, scaled) == lambda.pow(3) * z);
}

TEST_CASE("oracle is a polynomial of degree <= m in each u_i") {
  RationalSampler rng(43);
  const std::size_t n = 2, m = 3;
  const InhomParams base = sample_params(rng, n, m);
  const Boundary b = sample_boundary(rng);

  std::vector<std::pair<Rational, Rational>> pts;
  for (long t = 0; t <= static_cast<long>(m); ++t) {
    std::vector<Rational> u(base.u().begin(), base.u().end());
    u[0] = Rational(100 + t);  // far from everything, keeps params valid
    pts.emplace_back(u[0], oracle::partition_bruteforce(
                               InhomParams(u, {base.v().begin(), base.v().end()}, base.c()), b));
  }
  const Polynomial interp = Polynomial::interpolate(pts);
  CHECK(interp.degree() <= static_cast<long>(m));

  std::vector<Rational> u(base.u().begin(), base.u().end());
  u[0] = Rational(-555, 7);
  CHECK(interp.eval(u[0]) ==
        oracle::partition_bruteforce(InhomParams(u, {base.v().begin(), base.v().end()}, base.c()), b));
}

TEST_CASE("height cap throws LatticeTooLarge") {
  RationalSampler rng(47);
  const InhomParams p = sample_params(rng, 3, 2);
  const Boundary b = sample_boundary(rng);
  try {
    oracle::partition_bruteforce(p, b, 2);
    FAIL("expected LatticeTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Violation::LatticeTooLarge);
  }
}

TEST_CASE("rectangle limit: padded squares approach the rectangle value") {
  RationalSampler rng(53);
  const InhomParams p = sample_params(rng, 1, 2);
  const Boundary b = sample_boundary(rng);
  const std::vector<Rational> mags = {Rational(100), Rational(10000), Rational(1000000)};
  const auto diffs = oracle::check_rectangle_limit(p, b, mags);
  REQUIRE(diffs.size() == 3);
  CHECK(diffs[1].abs() < diffs[0].abs());
  CHECK(diffs[2].abs() < diffs[1].abs());
}

TEST_CASE("rectangle limit: padded squares approach the block-formula value") {
  // cross-module reference: the same limit procedure closes in on the
  // closed-form determinant value, not just on the oracle
  RationalSampler rng(97);
  const InhomParams p = sample_params(rng, 1, 2);
  const Boundary b = sample_boundary(rng);
  const Rational z_block = formulas::partition_block(p, b).value;
  const Rational trace_b = b.trace_b();

  std::vector<Rational> diffs;
  for (long mag : {100L, 10000L, 1000000L}) {
    std::vector<Rational> u(p.u().begin(), p.u().end());
    u.push_back(Rational(mag));
    const Rational factor =
        trace_b.reciprocal() * (p.c() / Rational(mag)).pow(2);
    const InhomParams square(u, {p.v().begin(), p.v().end()}, p.c());
    diffs.push_back(factor * oracle::partition_bruteforce(square, b) - z_block);
  }
  CHECK(diffs[1].abs() < diffs[0].abs());
  CHECK(diffs[2].abs() < diffs[1].abs());
}

TEST_CASE("rectangle limit: square case is exactly zero") {
  RationalSampler rng(59);
  const InhomParams p = sample_params(rng, 2, 2);
  const Boundary b = sample_boundary(rng);
  for (const auto& d :
       oracle::check_rectangle_limit(p, b, std::vector<Rational>{Rational(10)}))
    CHECK(d.is_zero());
}

TEST_CASE("rectangle limit: v-padding orientation and trace guard") {
  RationalSampler rng(61);
  const InhomParams p = sample_params(rng, 2, 1);
  const Boundary b = sample_boundary(rng);
  const std::vector<Rational> mags = {Rational(100), Rational(10000), Rational(1000000)};
  const auto diffs = oracle::check_rectangle_limit(p, b, mags);
  CHECK(diffs[2].abs() < diffs[1].abs());

  // tr(C_hat) = 0 makes the v-padding factor undefined.
  const Boundary degenerate({Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                            {Rational(1), Rational(1)}, {Rational(1), Rational(1)});
  try {
    oracle::check_rectangle_limit(p, degenerate, mags);
    FAIL("expected TraceZero");
  } catch (const Error& e) {
    CHECK(e.code() == Violation::TraceZero);
  }
}
