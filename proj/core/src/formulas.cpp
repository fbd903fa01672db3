#include "mr6v/formulas.hpp"

#include <stdexcept>

#include "mr6v/identities.hpp"
#include "mr6v/oracle.hpp"
#include "mr6v/weights.hpp"

namespace mr6v::formulas {

const char* method_name(Method m) {
  switch (m) {
    case Method::BruteForce: return "bruteforce";
    case Method::MidK1: return "mid-k1";
    case Method::MidK2: return "mid-k2";
    case Method::MidK3: return "mid-k3";
    case Method::Block: return "block";
    case Method::PDWBC: return "pdwbc";
  }
  return "unknown";
}

namespace {

Rational h_checked(const WeightFns& w, const Rational& a, const Rational& b) {
  Rational value = w.h(a, b);
  if (value.is_zero())
    throw Error(Violation::PoleHit, "h denominator vanishes (difference equals -c)");
  return value;
}

/// Shared preconditions of the partition-level formula routes.
struct TracePack {
  Rational tb, tc, tbc, beta;
};

TracePack require_formula_traces(const Boundary& b) {
  TracePack t{b.trace_b(), b.trace_c_hat(), b.trace_bc(), Rational(0)};
  if (t.tbc.is_zero()) throw Error(Violation::TraceZero, "tr(B C_hat) = 0");
  t.beta = b.beta();
  // beta = 1 happens exactly when tr(B) tr(C_hat) = 0, so this fires before
  // the individual trace checks; the pDWBC route covers that family.
  if (t.beta.is_one())
    throw Error(Violation::BetaOne, "beta = 1 is outside the determinant formulas");
  if (t.tb.is_zero()) throw Error(Violation::TraceZero, "tr(B) = 0");
  if (t.tc.is_zero()) throw Error(Violation::TraceZero, "tr(C_hat) = 0");
  return t;
}

/// The block matrix of the mixed phi/psi determinant. With beta = 1 and
/// phi1 this is also the partial-domain-wall determinant.
Matrix block_matrix_rows_phi(const InhomParams& p, const WeightFns& w, const Rational& beta) {
  const std::size_t n = p.n(), m = p.m();  // n <= m
  Matrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a.at(i, j) = i < n ? w.phi(p.u()[i] - p.v()[j], beta)
                         : w.psi(-p.v()[j], static_cast<long>(m - 1 - i));
    }
  }
  return a;
}

Matrix block_matrix_cols_phi(const InhomParams& p, const WeightFns& w, const Rational& beta) {
  const std::size_t n = p.n(), m = p.m();  // n >= m
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(i, j) = j < m ? w.phi(p.u()[i] - p.v()[j], beta)
                         : w.psi(p.u()[i], static_cast<long>(n - 1 - j));
    }
  }
  return a;
}

}  // namespace

Rational mid_k1(const InhomParams& p, const Rational& beta) {
  p.require_distinct();
  const WeightFns w(p.c());
  const std::size_t m = p.m();
  Matrix a(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::vector<Rational> v_rest = drop(p.v(), k);
    const Rational row_factor =
        product_over(p.u(), [&](const Rational& x) { return w.f(x, p.v()[k]); }) *
        product_over(v_rest, [&](const Rational& x) { return w.f(p.v()[k], x); });
    for (std::size_t l = 0; l < m; ++l) {
      a.at(k, l) = row_factor / h_checked(w, p.v()[k], p.v()[l]);
      if (k == l) a.at(k, l) -= beta;
    }
  }
  return a.det();
}

Rational mid_k2(const InhomParams& p, const Rational& beta) {
  p.require_distinct();
  const WeightFns w(p.c());
  const std::size_t n = p.n(), m = p.m();
  const Rational one_minus_beta = Rational(1) - beta;
  if (one_minus_beta.is_zero() && m < n)
    throw Error(Violation::BetaOne, "K2 prefactor (1-beta)^(m-n) undefined at beta = 1");
  Matrix a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<Rational> u_rest = drop(p.u(), k);
    const Rational diag =
        product_over(p.v(), [&](const Rational& x) { return w.f(p.u()[k], x); });
    const Rational row_factor =
        beta * product_over(u_rest, [&](const Rational& x) { return w.f(p.u()[k], x); });
    for (std::size_t l = 0; l < n; ++l) {
      a.at(k, l) = -(row_factor / h_checked(w, p.u()[k], p.u()[l]));
      if (k == l) a.at(k, l) += diag;
    }
  }
  return one_minus_beta.pow(static_cast<long>(m) - static_cast<long>(n)) * a.det();
}

Rational mid_k3(const InhomParams& p, const Rational& beta) {
  if (p.n() != p.m())
    throw Error(Violation::NotSquare, "the phi-determinant representation needs n = m");
  p.require_distinct();
  const WeightFns w(p.c());
  const std::size_t n = p.n();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = w.phi(p.u()[i] - p.v()[j], beta);
  return w.h_prod(p.u(), p.v()) / (w.vandermonde(p.u()) * w.vandermonde_prime(p.v())) * a.det();
}

ZFormulaResult partition_mid(const InhomParams& p, const Boundary& b, Method which) {
  const TracePack t = require_formula_traces(b);
  const WeightFns w(p.c());
  const long n = static_cast<long>(p.n()), m = static_cast<long>(p.m());

  ZFormulaResult r;
  r.method = which;
  r.prefactors.emplace_back("tr(B)^n", t.tb.pow(n));
  r.prefactors.emplace_back("tr(C_hat)^m", t.tc.pow(m));
  r.prefactors.emplace_back("1/g(u_bar,v_bar)", w.g_prod(p.u(), p.v()).reciprocal());
  switch (which) {
    case Method::MidK1:
      r.prefactors.emplace_back("(1-beta)^-m", (Rational(1) - t.beta).pow(-m));
      r.determinant = mid_k1(p, t.beta);
      break;
    case Method::MidK2:
      // mid_k2 already carries its (1-beta)^(m-n) factor
      r.prefactors.emplace_back("(1-beta)^-m", (Rational(1) - t.beta).pow(-m));
      r.determinant = mid_k2(p, t.beta);
      break;
    case Method::MidK3:
      r.prefactors.emplace_back("(1-beta)^-m", (Rational(1) - t.beta).pow(-m));
      r.determinant = mid_k3(p, t.beta);
      break;
    default:
      throw std::invalid_argument("partition_mid: not a modified-Izergin method");
  }
  r.value = r.reassemble();
  return r;
}

ZFormulaResult partition_block(const InhomParams& p, const Boundary& b) {
  p.require_distinct();
  const TracePack t = require_formula_traces(b);
  const WeightFns w(p.c());
  const std::size_t n = p.n(), m = p.m();
  const long min_nm = static_cast<long>(std::min(n, m));

  Rational det;
  if (n == m) {
    // Both printed branches degenerate to the all-phi matrix; evaluate each
    // and insist they agree.
    const Rational rows = block_matrix_rows_phi(p, w, t.beta).det();
    const Rational cols = block_matrix_cols_phi(p, w, t.beta).det();
    if (rows != cols)
      throw std::logic_error("block formula: n = m branch determinants disagree");
    det = rows;
  } else if (n < m) {
    det = block_matrix_rows_phi(p, w, t.beta).det();
  } else {
    det = block_matrix_cols_phi(p, w, t.beta).det();
  }

  ZFormulaResult r;
  r.method = Method::Block;
  r.determinant = det;
  r.prefactors.emplace_back("tr(B)^n", t.tb.pow(static_cast<long>(n)));
  r.prefactors.emplace_back("tr(C_hat)^m", t.tc.pow(static_cast<long>(m)));
  r.prefactors.emplace_back("(1-beta)^-min", (Rational(1) - t.beta).pow(-min_nm));
  r.prefactors.emplace_back("h(u_bar,v_bar)", w.h_prod(p.u(), p.v()));
  r.prefactors.emplace_back("1/g(u_bar,v_bar)", w.g_prod(p.u(), p.v()).reciprocal());
  r.prefactors.emplace_back("1/Delta(u_bar)", w.vandermonde(p.u()).reciprocal());
  r.prefactors.emplace_back("1/Delta'(v_bar)", w.vandermonde_prime(p.v()).reciprocal());
  r.value = r.reassemble();
  return r;
}

Rational partition_pdwbc(const InhomParams& p, std::size_t k) {
  const std::size_t n = p.n(), m = p.m();
  if (n > m || k > m - n)
    throw Error(Violation::BadK, "k must lie in [0, m-n]");
  p.require_distinct();
  const WeightFns w(p.c());
  const Rational det = block_matrix_rows_phi(p, w, Rational(1)).det();
  return identities::binomial(static_cast<long>(m - n), static_cast<long>(k)) *
         w.h_prod(p.u(), p.v()) /
         (w.g_prod(p.u(), p.v()) * w.vandermonde(p.u()) * w.vandermonde_prime(p.v())) * det;
}

bool check_pdwbc_expansion(const InhomParams& p, const Vec2& north, const Vec2& south) {
  const std::size_t n = p.n(), m = p.m();
  if (n > m) throw Error(Violation::BadK, "expansion needs n <= m");
  const Boundary b(north, south, /*east=*/{Rational(1), Rational(0)},
                   /*west=*/{Rational(0), Rational(1)});
  const Rational lhs = oracle::partition_bruteforce(p, b);
  Rational rhs;
  for (std::size_t k = 0; k <= m - n; ++k) {
    const Rational weight = north.up.pow(static_cast<long>(m - k)) *
                            north.down.pow(static_cast<long>(k)) *
                            south.up.pow(static_cast<long>(m - n - k)) *
                            south.down.pow(static_cast<long>(n + k));
    rhs += weight * partition_pdwbc(p, k);
  }
  return lhs == rhs;
}

}  // namespace mr6v::formulas
