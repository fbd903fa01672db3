#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mr6v/matrix.hpp"
#include "mr6v/rational.hpp"

namespace mr6v::identities {

/// C(n, k) over exact integers, with C(n, k) = 0 for k < 0 or k > n.
/// The out-of-range zeros are load-bearing: the extended minor definitions
/// below rely on them.
Rational binomial(long n, long k);
Rational factorial(unsigned long n);

/// A square matrix mixing Cauchy-kernel rows (or columns) for the first
/// min(n,m) indices with monomial psi rows (or columns) after, size
/// max(n,m). The shifted flag selects the 1/h kernel variant, which is the
/// same matrix with u translated by +c (n <= m) or v by -c (n >= m).
struct PartialCauchy {
  std::vector<Rational> u, v;
  Rational c;
  bool shifted = false;
};

Matrix assemble(const PartialCauchy& pc);
/// Closed-form determinant: g(u_bar,v_bar) Delta(u_bar) Delta'(v_bar), or
/// Delta(u_bar) Delta'(v_bar) / h(u_bar,v_bar) for the shifted variant.
Rational partial_cauchy_det(const PartialCauchy& pc);
/// Closed-form inverse (Cauchy block plus f_p rows/columns); multiplied with
/// the assembled matrix it gives the identity exactly.
Matrix partial_cauchy_inverse(const PartialCauchy& pc);

Rational elementary_symmetric(std::size_t r, std::span<const Rational> xs);
Rational complete_symmetric(std::size_t r, std::span<const Rational> xs);

/// sum_{r=0}^{n} (-1)^r e_r h_{n-r} = 0 for n >= 1.
bool check_eh_identity(std::size_t n, std::span<const Rational> xs);

/// V(x_bar) = (x_i^{j-1}).
Matrix vandermonde_matrix(std::span<const Rational> xs);
/// Closed-form inverse with entries (-1)^{N-i} e_{N-i}(x_bar_j) / prod_{k != j}(x_j - x_k).
Matrix vandermonde_inverse(std::span<const Rational> xs);

/// sum_k P(a_k) / prod_{j != k}(a_k - a_j) with P(z) = leading prod (z - b_r):
/// the residue sum of P/Q over the simple poles a_k of monic Q. Exactly zero
/// whenever deg Q > deg P + 1, i.e. |poles| > |roots| + 1.
Rational residue_sum(std::span<const Rational> poles, std::span<const Rational> numerator_roots,
                     const Rational& leading);

/// M_n(d) with entries C(d+i-1+j-1, i-1), 1-based; det(M_n(d)) = 1.
Matrix binomial_matrix(std::size_t n, long d);

/// The (k,l) minor D_{n-1}^{(k,l)}(d) of M_n(d) in closed form; 0 whenever
/// k or l falls outside [1, n] (extended definition), and 1 for the empty
/// D_0^{(1,1)}.
Rational binomial_minor(std::size_t n, long d, long k, long l);

/// D_{n-1}^{(k,l)}(d) = D_{n-2}^{(k-1,l-1)}(d+1) + D_{n-2}^{(k-1,l)}(d+1),
/// valid for n > 1, k > 1, any integer l.
bool check_minor_recurrence(std::size_t n, long d, long k, long l);

/// D_{n-1}^{(k,l)}(d) = sum_p C(k-1, p) D_{n-k}^{(1,l-p)}(d+k-1) for 1 <= k <= n.
bool check_minor_expansion(std::size_t n, long d, long k, long l);

}  // namespace mr6v::identities
