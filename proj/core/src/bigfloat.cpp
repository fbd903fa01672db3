#include "mr6v/bigfloat.hpp"

#include <algorithm>

#include "mr6v/errors.hpp"

namespace mr6v {

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat BigFloat::of(const Rational& r, mpfr_prec_t bits) {
  BigFloat x(bits);
  mpfr_set_q(x.v_, r.raw(), MPFR_RNDN);
  return x;
}

BigFloat BigFloat::of(long n, mpfr_prec_t bits) {
  BigFloat x(bits);
  mpfr_set_si(x.v_, n, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::of(double d, mpfr_prec_t bits) {
  BigFloat x(bits);
  mpfr_set_d(x.v_, d, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t bits) {
  BigFloat x(bits);
  if (mpfr_set_str(x.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw Error(Violation::ParseError, "malformed decimal '" + text + "'");
  return x;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

#define MR6V_BIGFLOAT_FN(name, mpfr_fn)        \
  BigFloat BigFloat::name() const {            \
    BigFloat r(precision());                   \
    mpfr_fn(r.v_, v_, MPFR_RNDN);              \
    return r;                                  \
  }

MR6V_BIGFLOAT_FN(sqrt, mpfr_sqrt)
MR6V_BIGFLOAT_FN(log, mpfr_log)
MR6V_BIGFLOAT_FN(log1p, mpfr_log1p)
MR6V_BIGFLOAT_FN(exp, mpfr_exp)
MR6V_BIGFLOAT_FN(sin, mpfr_sin)
MR6V_BIGFLOAT_FN(cos, mpfr_cos)
MR6V_BIGFLOAT_FN(sinh, mpfr_sinh)
MR6V_BIGFLOAT_FN(cosh, mpfr_cosh)

#undef MR6V_BIGFLOAT_FN

std::string BigFloat::str(int significant_digits) const {
  if (is_zero()) return "0";
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", significant_digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace mr6v
