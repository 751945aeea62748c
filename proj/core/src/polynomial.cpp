#include "efoc/polynomial.hpp"

#include <sstream>

#include "efoc/errors.hpp"

namespace efoc {

namespace {

// Node a_j such that basis element k is prod_{j<k} (x - a_j).
Rational node(const PsiSequence& seq, BasisKind kind, int j) {
  switch (kind) {
    case BasisKind::Monomial:
      return Rational(0);
    case BasisKind::PsiFalling:
      return seq.number(j);
    case BasisKind::PsiRising:
      return -seq.number(j);
  }
  return Rational(0);
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  if (degree < 0) throw DomainError("monomial of negative degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].to_string();
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Rational> v;
  std::string token;
  while (in >> token) v.push_back(Rational::parse(token));
  if (v.empty()) throw ParseError("empty polynomial text");
  return Polynomial(std::move(v));
}

std::string Polynomial::pretty(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += mag.to_string();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Rational eval(const Polynomial& p, const Rational& t) { return p(t); }
Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }

Polynomial basis_element(const PsiSequence& seq, BasisKind kind, int k) {
  if (k < 0) throw DomainError("basis index must be nonnegative");
  Polynomial out = Polynomial::constant(Rational(1));
  for (int j = 0; j < k; ++j) out = out * Polynomial{-node(seq, kind, j), Rational(1)};
  return out;
}

std::vector<Rational> to_basis(const Polynomial& p, const PsiSequence& seq, BasisKind kind) {
  if (p.is_zero()) return {};
  std::vector<Rational> rest = p.coefficients();
  std::vector<Rational> out;
  out.reserve(rest.size());
  int j = 0;
  while (rest.size() > 1) {
    // Divide rest by (x - a_j): quotient replaces rest, remainder is c_j.
    const Rational a = node(seq, kind, j);
    std::vector<Rational> quotient(rest.size() - 1);
    Rational carry(0);
    for (size_t i = rest.size(); i-- > 0;) {
      carry = rest[i] + carry * a;
      if (i > 0) quotient[i - 1] = carry;
    }
    out.push_back(carry);
    rest = std::move(quotient);
    ++j;
  }
  out.push_back(rest.front());
  return out;
}

Polynomial from_basis(const std::vector<Rational>& coeffs, const PsiSequence& seq,
                      BasisKind kind) {
  if (coeffs.empty()) return {};
  Polynomial acc = Polynomial::constant(coeffs.back());
  for (size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = acc * Polynomial{-node(seq, kind, static_cast<int>(k)), Rational(1)};
    acc += Polynomial::constant(coeffs[k]);
  }
  return acc;
}

}  // namespace efoc
