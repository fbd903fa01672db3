#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mr6v/rational.hpp"

namespace mr6v {

/// Seeded generator of small random rationals for the property suites.
/// Same seed, same sequence: the verify subcommand's determinism contract
/// rests on this.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational rational(long max_num = 12, long max_den = 8) {
    return Rational(uniform(-max_num, max_num), uniform(1, max_den));
  }

  Rational nonzero_rational(long max_num = 12, long max_den = 8) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  /// k pairwise-distinct rationals, also distinct from everything in `avoid`.
  std::vector<Rational> distinct_rationals(std::size_t k, std::span<const Rational> avoid,
                                           long max_num = 12, long max_den = 8) {
    std::vector<Rational> out;
    while (out.size() < k) {
      Rational r = rational(max_num, max_den);
      bool clash = false;
      for (const auto& a : avoid)
        if (a == r) clash = true;
      for (const auto& a : out)
        if (a == r) clash = true;
      if (!clash) out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mr6v
