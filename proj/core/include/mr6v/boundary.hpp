#pragma once

#include "mr6v/errors.hpp"
#include "mr6v/rational.hpp"

namespace mr6v {

/// Two-component spin vector in the basis (|1> = up, |2> = down).
struct Vec2 {
  Rational up, down;
};

/// The four boundary vectors n, s, e, w of the plane lattice. The rank-one
/// twists are B = |e><w| and C_hat = |s><n|; their traces and the twist
/// parameter beta are recomputed on demand, never cached.
class Boundary {
 public:
  Boundary(Vec2 north, Vec2 south, Vec2 east, Vec2 west)
      : north_(std::move(north)),
        south_(std::move(south)),
        east_(std::move(east)),
        west_(std::move(west)) {}

  const Vec2& north() const { return north_; }
  const Vec2& south() const { return south_; }
  const Vec2& east() const { return east_; }
  const Vec2& west() const { return west_; }

  /// tr(B) = <w|e>
  Rational trace_b() const { return west_.up * east_.up + west_.down * east_.down; }
  /// tr(C_hat) = <n|s>
  Rational trace_c_hat() const { return north_.up * south_.up + north_.down * south_.down; }
  /// tr(B C_hat) = <n|e><w|s>
  Rational trace_bc() const {
    return (north_.up * east_.up + north_.down * east_.down) *
           (west_.up * south_.up + west_.down * south_.down);
  }

  /// beta = 1 - tr(B) tr(C_hat) / tr(B C_hat); defined only when tr(B C_hat) != 0.
  Rational beta() const {
    const Rational tbc = trace_bc();
    if (tbc.is_zero())
      throw Error(Violation::TraceZero, "beta undefined: tr(B C_hat) = 0");
    return Rational(1) - trace_b() * trace_c_hat() / tbc;
  }

 private:
  Vec2 north_, south_, east_, west_;
};

}  // namespace mr6v
