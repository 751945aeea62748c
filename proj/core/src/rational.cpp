#include "efoc/rational.hpp"

#include <cstdio>
#include <ostream>
#include <regex>

#include "efoc/errors.hpp"

namespace efoc {

namespace {

mpz_class pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

// Compares a/b against 10^e for positive a, b.
int compare_with_power(const mpz_class& a, const mpz_class& b, long e) {
  if (e >= 0) return cmp(a, b * pow10(static_cast<unsigned long>(e)));
  return cmp(a * pow10(static_cast<unsigned long>(-e)), b);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(/([0-9]+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) {
    throw ParseError("malformed rational '" + s + "' (expected p or p/q)");
  }
  std::string num = m[1].str();
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(1);
  if (m[3].matched) {
    d = mpz_class(m[3].str(), 10);
    if (d == 0) throw ParseError("malformed rational '" + s + "' (zero denominator)");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  const int s = sign();
  if (s == 0) {
    return "0." + std::string(static_cast<size_t>(digits - 1), '0') + "e+00";
  }
  const mpz_class a = ::abs(value_.get_num());
  const mpz_class b = value_.get_den();

  // Locate e with 10^e <= a/b < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  while (compare_with_power(a, b, e) < 0) --e;
  while (compare_with_power(a, b, e + 1) >= 0) ++e;

  // mantissa = round(a / b * 10^(digits-1-e))
  const long shift = digits - 1 - e;
  mpz_class num = a;
  mpz_class den = b;
  if (shift >= 0) num *= pow10(static_cast<unsigned long>(shift));
  else den *= pow10(static_cast<unsigned long>(-shift));
  mpz_class mant = (2 * num + den) / (2 * den);
  if (mant == pow10(static_cast<unsigned long>(digits))) {
    mant /= 10;
    ++e;
  }

  std::string m = mant.get_str();
  std::string out = s < 0 ? "-" : "";
  out += m.substr(0, 1);
  if (digits > 1) out += "." + m.substr(1);
  char exp_buf[32];
  std::snprintf(exp_buf, sizeof exp_buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return out + exp_buf;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace efoc
