#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mr6v/errors.hpp"
#include "mr6v/rational.hpp"

namespace mr6v {

/// Spectral parameters of the inhomogeneous lattice: row parameters u (n of
/// them), column parameters v (m of them) and the crossing constant c != 0.
/// Construction records a distinctness certificate: whether all u are
/// pairwise distinct, all v are pairwise distinct, and u_i != v_j for every
/// pair. The determinant formulas require the certificate; the brute-force
/// oracle does not (the contraction has no poles).
class InhomParams {
 public:
  InhomParams(std::vector<Rational> u, std::vector<Rational> v, Rational c)
      : u_(std::move(u)), v_(std::move(v)), c_(std::move(c)) {
    if (c_.is_zero()) throw Error(Violation::ZeroCrossing, "crossing constant c = 0");
    if (u_.empty() || v_.empty())
      throw std::invalid_argument("InhomParams: lattice must have at least one row and column");
    distinct_ = compute_certificate();
  }

  std::size_t n() const { return u_.size(); }
  std::size_t m() const { return v_.size(); }
  std::span<const Rational> u() const { return u_; }
  std::span<const Rational> v() const { return v_; }
  const Rational& c() const { return c_; }

  bool all_distinct() const { return distinct_; }
  void require_distinct() const {
    if (!distinct_)
      throw Error(Violation::DistinctnessViolation,
                  "spectral parameters must be pairwise distinct");
  }

 private:
  bool compute_certificate() const {
    for (std::size_t i = 0; i < u_.size(); ++i)
      for (std::size_t j = i + 1; j < u_.size(); ++j)
        if (u_[i] == u_[j]) return false;
    for (std::size_t i = 0; i < v_.size(); ++i)
      for (std::size_t j = i + 1; j < v_.size(); ++j)
        if (v_[i] == v_[j]) return false;
    for (const auto& a : u_)
      for (const auto& b : v_)
        if (a == b) return false;
    return true;
  }

  std::vector<Rational> u_, v_;
  Rational c_;
  bool distinct_ = false;
};

/// x with its i-th element removed (the bar-notation set u_bar \ u_i).
inline std::vector<Rational> drop(std::span<const Rational> xs, std::size_t i) {
  std::vector<Rational> out;
  out.reserve(xs.size() - 1);
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (k != i) out.push_back(xs[k]);
  return out;
}

}  // namespace mr6v
