#include "mr6v/oracle.hpp"

#include <cstddef>
#include <stdexcept>

namespace mr6v::oracle {

Matrix r_matrix(const Rational& u, const Rational& v, const Rational& c) {
  if (c.is_zero()) throw Error(Violation::ZeroCrossing, "R-matrix needs c != 0");
  const Rational b = (u - v) / c;
  const Rational h = b + Rational(1);
  Matrix r(4, 4);
  r.at(0, 0) = h;
  r.at(1, 1) = b;
  r.at(1, 2) = Rational(1);
  r.at(2, 1) = Rational(1);
  r.at(2, 2) = b;
  r.at(3, 3) = h;
  return r;
}

namespace {

/// Embeds a two-site 4x4 operator acting on qubits (a, b) of a 3-qubit space
/// into the full 8x8 matrix. Qubit 0 is the most significant bit; the pair
/// index into the 4x4 block is 2*bit_a + bit_b.
Matrix embed_pair(const Matrix& r4, int a, int b) {
  Matrix out(8, 8);
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 8; ++col) {
      bool diag_elsewhere = true;
      for (int q = 0; q < 3; ++q) {
        if (q == a || q == b) continue;
        if (((row >> (2 - q)) & 1) != ((col >> (2 - q)) & 1)) diag_elsewhere = false;
      }
      if (!diag_elsewhere) continue;
      const int ra = (row >> (2 - a)) & 1, rb = (row >> (2 - b)) & 1;
      const int ca = (col >> (2 - a)) & 1, cb = (col >> (2 - b)) & 1;
      out.at(row, col) = r4.at(2 * ra + rb, 2 * ca + cb);
    }
  }
  return out;
}

}  // namespace

bool check_yang_baxter(const Rational& u, const Rational& v, const Rational& w,
                       const Rational& c) {
  const Matrix r_ab = embed_pair(r_matrix(u, v, c), 0, 1);
  const Matrix r_ac = embed_pair(r_matrix(u, w, c), 0, 2);
  const Matrix r_bc = embed_pair(r_matrix(v, w, c), 1, 2);
  return r_ab * r_ac * r_bc == r_bc * r_ac * r_ab;
}

Rational partition_bruteforce(const InhomParams& p, const Boundary& b,
                              std::size_t max_height) {
  const std::size_t n = p.n(), m = p.m();
  if (n > max_height)
    throw Error(Violation::LatticeTooLarge,
                "lattice height " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_height));
  const std::size_t dim = std::size_t{1} << n;

  // Z = <W (x) N| T_1 ... T_m |E (x) S> with T_j = R_{a_1 b_j} ... R_{a_n b_j}.
  // Rightmost factors act first on the ket, so columns run j = m..1 and rows
  // i = n..1 within a column. Row-state bit i-1 holds the spin of line i
  // (0 = up), and the column spin rides along as a second amplitude array.
  std::vector<Rational> state(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Rational amp(1);
    for (std::size_t bit = 0; bit < n; ++bit)
      amp *= ((idx >> bit) & 1) ? b.east().down : b.east().up;
    state[idx] = std::move(amp);
  }

  std::vector<Rational> col0(dim), col1(dim);
  for (std::size_t j = m; j-- > 0;) {
    for (std::size_t idx = 0; idx < dim; ++idx) {
      col0[idx] = state[idx] * b.south().up;
      col1[idx] = state[idx] * b.south().down;
    }
    for (std::size_t i = n; i-- > 0;) {
      const Rational bw = (p.u()[i] - p.v()[j]) / p.c();
      const Rational hw = bw + Rational(1);
      const std::size_t mask = std::size_t{1} << i;
      for (std::size_t idx = 0; idx < dim; ++idx) {
        if (idx & mask) continue;
        const std::size_t pidx = idx | mask;
        // (row bit, col bit) quadruple in the 4x4 basis 2a+b:
        Rational a0 = std::move(col0[idx]);   // |a=0,b=0>
        Rational a1 = std::move(col1[idx]);   // |a=0,b=1>
        Rational a2 = std::move(col0[pidx]);  // |a=1,b=0>
        Rational a3 = std::move(col1[pidx]);  // |a=1,b=1>
        col0[idx] = hw * a0;
        col1[idx] = bw * a1 + a2;
        col0[pidx] = a1 + bw * a2;
        col1[pidx] = hw * a3;
      }
    }
    for (std::size_t idx = 0; idx < dim; ++idx)
      state[idx] = b.north().up * col0[idx] + b.north().down * col1[idx];
  }

  Rational z;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Rational amp = std::move(state[idx]);
    for (std::size_t bit = 0; bit < n; ++bit)
      amp *= ((idx >> bit) & 1) ? b.west().down : b.west().up;
    z += amp;
  }
  return z;
}

std::vector<Rational> check_rectangle_limit(const InhomParams& rect, const Boundary& b,
                                            std::span<const Rational> magnitudes) {
  for (std::size_t i = 0; i + 1 < magnitudes.size(); ++i)
    if (!(magnitudes[i] < magnitudes[i + 1]))
      throw std::invalid_argument("check_rectangle_limit: magnitudes must increase");
  const std::size_t n = rect.n(), m = rect.m();
  const Rational z_rect = partition_bruteforce(rect, b);
  std::vector<Rational> diffs;
  diffs.reserve(magnitudes.size());

  for (const auto& mag : magnitudes) {
    if (n == m) {
      diffs.emplace_back(0);
      continue;
    }
    if (n < m) {
      const Rational tb = b.trace_b();
      if (tb.is_zero())
        throw Error(Violation::TraceZero, "rectangle limit over u needs tr(B) != 0");
      std::vector<Rational> u(rect.u().begin(), rect.u().end());
      Rational factor = tb.pow(-static_cast<long>(m - n));
      for (std::size_t i = n; i < m; ++i) {
        const Rational extra = mag.pow(static_cast<long>(i - n + 1));
        factor *= (rect.c() / extra).pow(static_cast<long>(m));
        u.push_back(extra);
      }
      const InhomParams square(std::move(u), {rect.v().begin(), rect.v().end()}, rect.c());
      diffs.push_back(factor * partition_bruteforce(square, b) - z_rect);
    } else {
      const Rational tc = b.trace_c_hat();
      if (tc.is_zero())
        throw Error(Violation::TraceZero, "rectangle limit over v needs tr(C_hat) != 0");
      std::vector<Rational> v(rect.v().begin(), rect.v().end());
      Rational factor = tc.pow(-static_cast<long>(n - m));
      for (std::size_t j = m; j < n; ++j) {
        const Rational extra = mag.pow(static_cast<long>(j - m + 1));
        factor *= (rect.c() / (-extra)).pow(static_cast<long>(n));
        v.push_back(extra);
      }
      const InhomParams square({rect.u().begin(), rect.u().end()}, std::move(v), rect.c());
      diffs.push_back(factor * partition_bruteforce(square, b) - z_rect);
    }
  }
  return diffs;
}

}  // namespace mr6v::oracle
