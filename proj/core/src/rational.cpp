#include "mr6v/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "mr6v/errors.hpp"

namespace mr6v {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, n, 1);
  Rational den;
  mpq_set_si(den.q_, d, 1);
  mpq_div(q_, q_, den.q_);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

bool all_zero(std::string_view s) {
  for (char ch : s) {
    if (ch != '0') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  bool has_den = false;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    has_den = true;
  }
  if (!all_digits(num) || (has_den && !all_digits(den)))
    throw Error(Violation::ParseError, "malformed rational '" + std::string(text) + "'");
  if (has_den && all_zero(den))
    throw Error(Violation::ParseError, "zero denominator in '" + std::string(text) + "'");

  Rational r;
  std::string canonical(num);
  if (has_den) {
    canonical += '/';
    canonical += den;
  }
  if (mpq_set_str(r.q_, canonical.c_str(), 10) != 0)
    throw Error(Violation::ParseError, "malformed rational '" + std::string(text) + "'");
  mpq_canonicalize(r.q_);
  if (negative) mpq_neg(r.q_, r.q_);
  return r;
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? reciprocal() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
  Rational acc(1);
  while (k > 0) {
    if (k & 1ul) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mr6v
