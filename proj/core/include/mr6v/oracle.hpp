#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mr6v/boundary.hpp"
#include "mr6v/matrix.hpp"
#include "mr6v/params.hpp"

namespace mr6v::oracle {

/// Default cap on the lattice height n (the contraction state has 2^n
/// amplitudes, so n beyond ~16 is impractical). The CLI overrides this from
/// the MR6V_MAX_N environment variable.
inline constexpr std::size_t kDefaultMaxHeight = 14;

/// The 4x4 vertex operator R(u-v) = ((u-v)/c) I + P on the ordered basis
/// |11>, |12>, |21>, |22>: diagonal (h, b, b, h) with the central
/// anti-diagonal 1s, where h = (u-v+c)/c and b = (u-v)/c.
Matrix r_matrix(const Rational& u, const Rational& v, const Rational& c);

/// Exact entrywise comparison of R12 R13 R23 and R23 R13 R12 on the
/// 8-dimensional triple space.
bool check_yang_baxter(const Rational& u, const Rational& v, const Rational& w,
                       const Rational& c);

/// Ground-truth partition function by direct contraction, column by column
/// over the 2^n row-state. Coincident spectral parameters are fine here; the
/// contraction has no poles. Cost O(m n 2^n) exact multiplies.
Rational partition_bruteforce(const InhomParams& p, const Boundary& b,
                              std::size_t max_height = kDefaultMaxHeight);

/// Checks the rectangle-from-square limit procedure: for each magnitude M the
/// rectangle's extra parameters are padded with the geometrically separated
/// values M, M^2, ... (emulating the sequential limits, largest first), the
/// square-lattice oracle value is rescaled by the prescribed factor, and the
/// difference from the rectangle oracle value is returned. The differences
/// shrink as M grows; for n = m they are exactly zero.
std::vector<Rational> check_rectangle_limit(const InhomParams& rect, const Boundary& b,
                                            std::span<const Rational> magnitudes);

}  // namespace mr6v::oracle
