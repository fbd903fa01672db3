#include "mr6v/identities.hpp"

#include <gmp.h>

#include <stdexcept>

#include "mr6v/errors.hpp"
#include "mr6v/params.hpp"
#include "mr6v/weights.hpp"

namespace mr6v::identities {

Rational binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return Rational(0);
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  Rational r = Rational::of_mpz(z);
  mpz_clear(z);
  return r;
}

Rational factorial(unsigned long n) {
  Rational acc(1);
  for (unsigned long i = 2; i <= n; ++i) acc *= Rational(static_cast<long>(i));
  return acc;
}

namespace {

void require_cauchy_distinct(const PartialCauchy& pc) {
  // With the shifted kernel the Cauchy block reads 1/h(u_i, v_j), whose pole
  // sits at u_i + c = v_j rather than u_i = v_j.
  const Rational shift = pc.shifted && pc.u.size() <= pc.v.size() ? pc.c : Rational(0);
  const Rational vshift = pc.shifted && pc.u.size() > pc.v.size() ? -pc.c : Rational(0);
  for (std::size_t i = 0; i < pc.u.size(); ++i)
    for (std::size_t j = i + 1; j < pc.u.size(); ++j)
      if (pc.u[i] == pc.u[j])
        throw Error(Violation::DistinctnessViolation, "repeated u parameter");
  for (std::size_t i = 0; i < pc.v.size(); ++i)
    for (std::size_t j = i + 1; j < pc.v.size(); ++j)
      if (pc.v[i] == pc.v[j])
        throw Error(Violation::DistinctnessViolation, "repeated v parameter");
  for (const auto& a : pc.u)
    for (const auto& b : pc.v)
      if (a + shift == b + vshift)
        throw Error(Violation::DistinctnessViolation,
                    pc.shifted ? "Cauchy kernel pole: u + c meets v" : "u meets v");
}

/// f_p(x_bar | y_bar) = c^{-p} sum_{l=0}^{p} h_{p-l}(x_bar) e_l(y_bar).
Rational f_poly(std::size_t p, std::span<const Rational> xs, std::span<const Rational> ys,
                const Rational& c) {
  Rational acc;
  for (std::size_t l = 0; l <= p; ++l)
    acc += complete_symmetric(p - l, xs) * elementary_symmetric(l, ys);
  return acc / c.pow(static_cast<long>(p));
}

std::vector<Rational> negated(std::span<const Rational> xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(-x);
  return out;
}

std::vector<Rational> translated(std::span<const Rational> xs, const Rational& t) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x + t);
  return out;
}

/// Inverse of the plain (unshifted) partial Cauchy matrix.
Matrix plain_inverse(std::span<const Rational> u, std::span<const Rational> v,
                     const Rational& c) {
  const WeightFns w(c);
  const std::size_t n = u.size(), m = v.size();
  const std::size_t size = std::max(n, m);
  Matrix inv(size, size);

  auto cauchy_entry = [&](std::size_t i, std::size_t j) {
    // g(u_j, v_i) g(u_bar_j, u_j) g(v_i, v_bar_i) / ( g(u_j, v_bar) g(u_bar, v_i) )
    const std::vector<Rational> u_rest = drop(u, j);
    const std::vector<Rational> v_rest = drop(v, i);
    return w.g(u[j], v[i]) *
           product_over(u_rest, [&](const Rational& x) { return w.g(x, u[j]); }) *
           product_over(v_rest, [&](const Rational& x) { return w.g(v[i], x); }) /
           (product_over(v, [&](const Rational& x) { return w.g(u[j], x); }) *
            product_over(u, [&](const Rational& x) { return w.g(x, v[i]); }));
  };

  if (n <= m) {
    for (std::size_t i = 0; i < size; ++i) {
      const std::vector<Rational> v_rest = drop(v, i);
      const Rational psi_factor =
          product_over(v_rest, [&](const Rational& x) { return w.g(v[i], x); }) /
          product_over(u, [&](const Rational& x) { return w.g(v[i], x); });
      for (std::size_t j = 0; j < size; ++j) {
        if (j < n) {
          inv.at(i, j) = cauchy_entry(i, j);
        } else {
          inv.at(i, j) = psi_factor * f_poly(j - n, u, negated(v_rest), c);
        }
      }
    }
  } else {
    const std::vector<Rational> neg_v = negated(v);
    for (std::size_t j = 0; j < size; ++j) {
      const std::vector<Rational> u_rest = drop(u, j);
      const Rational psi_factor =
          product_over(u_rest, [&](const Rational& x) { return w.g(x, u[j]); }) /
          product_over(v, [&](const Rational& x) { return w.g(x, u[j]); });
      for (std::size_t i = 0; i < size; ++i) {
        if (i < m) {
          inv.at(i, j) = cauchy_entry(i, j);
        } else {
          inv.at(i, j) = psi_factor * f_poly(i - m, neg_v, u_rest, c);
        }
      }
    }
  }
  return inv;
}

}  // namespace

Matrix assemble(const PartialCauchy& pc) {
  require_cauchy_distinct(pc);
  const WeightFns w(pc.c);
  const std::size_t n = pc.u.size(), m = pc.v.size();
  const std::size_t size = std::max(n, m);
  Matrix a(size, size);
  auto kernel = [&](const Rational& uu, const Rational& vv) {
    return pc.shifted ? w.h(uu, vv).reciprocal() : w.g(uu, vv);
  };
  if (n <= m) {
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        a.at(i, j) = i < n ? kernel(pc.u[i], pc.v[j])
                           : w.psi(-pc.v[j], static_cast<long>(size - 1 - i));
  } else {
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        a.at(i, j) = j < m ? kernel(pc.u[i], pc.v[j])
                           : w.psi(pc.u[i], static_cast<long>(size - 1 - j));
  }
  return a;
}

Rational partial_cauchy_det(const PartialCauchy& pc) {
  require_cauchy_distinct(pc);
  const WeightFns w(pc.c);
  const Rational delta = w.vandermonde(pc.u) * w.vandermonde_prime(pc.v);
  return pc.shifted ? delta / w.h_prod(pc.u, pc.v) : delta * w.g_prod(pc.u, pc.v);
}

Matrix partial_cauchy_inverse(const PartialCauchy& pc) {
  require_cauchy_distinct(pc);
  if (!pc.shifted) return plain_inverse(pc.u, pc.v, pc.c);
  // Shifted variant: translate the parameters back to the plain kernel.
  if (pc.u.size() <= pc.v.size())
    return plain_inverse(translated(pc.u, pc.c), pc.v, pc.c);
  return plain_inverse(pc.u, translated(pc.v, -pc.c), pc.c);
}

Rational elementary_symmetric(std::size_t r, std::span<const Rational> xs) {
  if (r > xs.size()) return Rational(0);
  // Coefficients of prod (1 + x_i t), built up one variable at a time.
  std::vector<Rational> e(r + 1);
  e[0] = Rational(1);
  std::size_t filled = 0;
  for (const auto& x : xs) {
    filled = std::min(filled + 1, r);
    for (std::size_t k = filled; k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e[r];
}

Rational complete_symmetric(std::size_t r, std::span<const Rational> xs) {
  // h_r over k variables satisfies h_r(..., x) = h_r(...) + x h_{r-1}(..., x).
  std::vector<Rational> h(r + 1);
  h[0] = Rational(1);
  for (const auto& x : xs)
    for (std::size_t k = 1; k <= r; ++k) h[k] += x * h[k - 1];
  return h[r];
}

bool check_eh_identity(std::size_t n, std::span<const Rational> xs) {
  if (n == 0) throw std::invalid_argument("check_eh_identity: n must be >= 1");
  Rational acc;
  for (std::size_t r = 0; r <= n; ++r) {
    const Rational term = elementary_symmetric(r, xs) * complete_symmetric(n - r, xs);
    acc += (r % 2 == 0) ? term : -term;
  }
  return acc.is_zero();
}

Matrix vandermonde_matrix(std::span<const Rational> xs) {
  const std::size_t n = xs.size();
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational p(1);
    for (std::size_t j = 0; j < n; ++j) {
      v.at(i, j) = p;
      p *= xs[i];
    }
  }
  return v;
}

Matrix vandermonde_inverse(std::span<const Rational> xs) {
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (xs[i] == xs[j])
        throw Error(Violation::DistinctnessViolation, "Vandermonde nodes must be distinct");
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::vector<Rational> rest = drop(xs, j);
    Rational denom(1);
    for (const auto& x : rest) denom *= xs[j] - x;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational e = elementary_symmetric(n - 1 - i, rest);
      inv.at(i, j) = ((n - 1 - i) % 2 == 0 ? e : -e) / denom;
    }
  }
  return inv;
}

Rational residue_sum(std::span<const Rational> poles, std::span<const Rational> numerator_roots,
                     const Rational& leading) {
  for (std::size_t i = 0; i < poles.size(); ++i)
    for (std::size_t j = i + 1; j < poles.size(); ++j)
      if (poles[i] == poles[j])
        throw Error(Violation::DistinctnessViolation, "poles must be simple");
  if (poles.size() <= numerator_roots.size() + 1)
    throw Error(Violation::DegreeViolation,
                "need deg Q > deg P + 1, i.e. more poles than numerator roots + 1");
  Rational acc;
  for (std::size_t k = 0; k < poles.size(); ++k) {
    Rational num = leading;
    for (const auto& b : numerator_roots) num *= poles[k] - b;
    Rational den(1);
    for (std::size_t j = 0; j < poles.size(); ++j)
      if (j != k) den *= poles[k] - poles[j];
    acc += num / den;
  }
  return acc;
}

Matrix binomial_matrix(std::size_t n, long d) {
  if (n == 0 || d < 0) throw std::invalid_argument("binomial_matrix: need n >= 1, d >= 0");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = binomial(d + static_cast<long>(i) + static_cast<long>(j),
                            static_cast<long>(i));
  return m;
}

Rational binomial_minor(std::size_t n, long d, long k, long l) {
  if (n == 0 || d < 0) throw std::invalid_argument("binomial_minor: need n >= 1, d >= 0");
  if (k < 1 || l < 1 || k > static_cast<long>(n) || l > static_cast<long>(n))
    return Rational(0);
  // D_{n-1}^{(k,l)}(d) = (n-k)!^{-1} prod_{q=k}^{n}(d+q)
  //                      sum_{p=max(l,k)}^{min(k+l-1,n)} C(k-1,p-l) C(n-k,p-k) / (d+p)
  const long nn = static_cast<long>(n);
  Rational prod(1);
  for (long q = k; q <= nn; ++q) prod *= Rational(d + q);
  Rational sum;
  for (long p = std::max(l, k); p <= std::min(k + l - 1, nn); ++p)
    sum += binomial(k - 1, p - l) * binomial(nn - k, p - k) / Rational(d + p);
  return prod * sum / factorial(static_cast<unsigned long>(nn - k));
}

bool check_minor_recurrence(std::size_t n, long d, long k, long l) {
  if (n < 2 || k < 2)
    throw std::invalid_argument("check_minor_recurrence: stated for n > 1 and k > 1");
  return binomial_minor(n, d, k, l) ==
         binomial_minor(n - 1, d + 1, k - 1, l - 1) + binomial_minor(n - 1, d + 1, k - 1, l);
}

bool check_minor_expansion(std::size_t n, long d, long k, long l) {
  if (k < 1 || k > static_cast<long>(n))
    throw std::invalid_argument("check_minor_expansion: needs 1 <= k <= n");
  Rational rhs;
  for (long p = 0; p <= k - 1; ++p)
    rhs += binomial(k - 1, p) * binomial_minor(n - static_cast<std::size_t>(k) + 1,
                                               d + k - 1, 1, l - p);
  return binomial_minor(n, d, k, l) == rhs;
}

}  // namespace mr6v::identities
