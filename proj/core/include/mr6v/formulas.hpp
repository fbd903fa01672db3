#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mr6v/boundary.hpp"
#include "mr6v/matrix.hpp"
#include "mr6v/params.hpp"

namespace mr6v::formulas {

enum class Method { BruteForce, MidK1, MidK2, MidK3, Block, PDWBC };

const char* method_name(Method m);

/// A partition-function value together with the bookkeeping needed to
/// reassemble it: value = (product of prefactors) * determinant, exactly.
struct ZFormulaResult {
  Rational value;
  Method method = Method::Block;
  std::vector<std::pair<std::string, Rational>> prefactors;
  Rational determinant;

  Rational reassemble() const {
    Rational acc = determinant;
    for (const auto& [_, f] : prefactors) acc *= f;
    return acc;
  }
};

/// Modified Izergin determinant, m x m representation:
/// det( -beta delta_kl + f(u_bar, v_k) f(v_k, v_bar_k) / h(v_k, v_l) ).
Rational mid_k1(const InhomParams& p, const Rational& beta);

/// n x n representation, including its (1-beta)^(m-n) prefactor:
/// (1-beta)^(m-n) det( f(u_k, v_bar) delta_kl - beta f(u_k, u_bar_k) / h(u_k, u_l) ).
Rational mid_k2(const InhomParams& p, const Rational& beta);

/// Square-lattice representation (n = m only):
/// h(u_bar, v_bar) / (Delta(u_bar) Delta'(v_bar)) det( phi_beta(u_i - v_j) ).
Rational mid_k3(const InhomParams& p, const Rational& beta);

/// Z through the chosen modified-Izergin representation with the
/// tr(B)^n tr(C_hat)^m (1-beta)^{-m} / g(u_bar, v_bar) prefactor.
ZFormulaResult partition_mid(const InhomParams& p, const Boundary& b, Method which);

/// Z through the block determinant that mixes phi rows (or columns) for the
/// first min(n,m) indices with psi monomial rows (or columns) after; for
/// n = m both branch expressions are evaluated and checked against each other.
ZFormulaResult partition_block(const InhomParams& p, const Boundary& b);

/// Partial-domain-wall partition function Z_nm(u_bar | v_bar | k), with
/// beta = 1 hard-wired inside phi_1 and the binomial(m-n, k) prefactor.
Rational partition_pdwbc(const InhomParams& p, std::size_t k);

/// Appendix-identity check: with east = (1,0) and west = (0,1) fixed, the
/// oracle value with general north/south equals the weighted sum
/// sum_k n1^{m-k} n2^k s1^{m-n-k} s2^{n+k} Z_pdwbc(k), exactly.
bool check_pdwbc_expansion(const InhomParams& p, const Vec2& north, const Vec2& south);

}  // namespace mr6v::formulas
