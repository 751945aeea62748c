#include "efoc/operators.hpp"

#include <algorithm>
#include <sstream>

#include "efoc/errors.hpp"

namespace efoc {

OperatorSeries::OperatorSeries(PsiSequence seq, std::vector<Rational> coeffs, int order)
    : seq_(std::move(seq)), coeffs_(std::move(coeffs)) {
  if (order < 0) throw DomainError("operator series order must be nonnegative");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

OperatorSeries OperatorSeries::identity(const PsiSequence& seq, int order) {
  return OperatorSeries(seq, {Rational(1)}, order);
}

OperatorSeries OperatorSeries::derivative(const PsiSequence& seq, int order) {
  if (order < 1) throw DomainError("the derivative series needs order >= 1");
  return OperatorSeries(seq, {Rational(0), seq.factorial(1)}, order);
}

OperatorSeries OperatorSeries::parse(const PsiSequence& seq, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Rational> v;
  std::string token;
  while (in >> token) v.push_back(Rational::parse(token));
  if (v.empty()) throw ParseError("empty operator series text");
  const int order = static_cast<int>(v.size()) - 1;
  return OperatorSeries(seq, std::move(v), order);
}

const Rational& OperatorSeries::coefficient(int k) const {
  if (k < 0 || k > order()) {
    throw TruncationError("coefficient " + std::to_string(k) + " requested from series of order " +
                          std::to_string(order()));
  }
  return coeffs_[static_cast<size_t>(k)];
}

OperatorSeries OperatorSeries::truncated(int order) const {
  if (order > this->order()) {
    throw TruncationError("cannot extend series of order " + std::to_string(this->order()) +
                          " to order " + std::to_string(order));
  }
  return OperatorSeries(seq_, coeffs_, order);
}

std::string OperatorSeries::to_string() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].to_string();
  }
  return out;
}

bool operator==(const OperatorSeries& a, const OperatorSeries& b) {
  return a.seq_ == b.seq_ && a.coeffs_ == b.coeffs_;
}

Polynomial psi_derivative(const PsiSequence& seq, const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(static_cast<size_t>(p.degree()));
  for (int n = 1; n <= p.degree(); ++n) {
    out[static_cast<size_t>(n - 1)] = seq.number(n) * p.coefficient(n);
  }
  return Polynomial(std::move(out));
}

Polynomial psi_integral(const PsiSequence& seq, const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(static_cast<size_t>(p.degree()) + 2);
  for (int n = 0; n <= p.degree(); ++n) {
    out[static_cast<size_t>(n) + 1] = p.coefficient(n) / seq.number(n + 1);
  }
  return Polynomial(std::move(out));
}

Polynomial translate(const PsiSequence& seq, const Rational& a, const Polynomial& p) {
  Polynomial acc;
  Polynomial derivative = p;
  Rational power(1);
  for (int n = 0; !derivative.is_zero(); ++n) {
    acc += derivative * (power / seq.factorial(n));
    derivative = psi_derivative(seq, derivative);
    power *= a;
  }
  return acc;
}

OperatorSeries series_mul(const OperatorSeries& a, const OperatorSeries& b) {
  if (!(a.sequence() == b.sequence())) {
    throw DomainError("series over different sequences: " + a.sequence().descriptor() + " vs " +
                      b.sequence().descriptor());
  }
  const int order = std::min(a.order(), b.order());
  const auto& seq = a.sequence();
  std::vector<Rational> out(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc(0);
    for (int i = 0; i <= n; ++i) {
      const Rational& ai = a.coefficient(i);
      const Rational& bj = b.coefficient(n - i);
      if (ai.is_zero() || bj.is_zero()) continue;
      acc += seq.binomial(n, i) * ai * bj;
    }
    out[static_cast<size_t>(n)] = acc;
  }
  return OperatorSeries(seq, std::move(out), order);
}

OperatorSeries series_invert(const OperatorSeries& s) {
  if (!s.is_invertible()) throw NotInvertibleError("operator series has zero constant term");
  const auto& seq = s.sequence();
  const int order = s.order();
  const Rational inv0 = s.coefficient(0).inverse();
  std::vector<Rational> t(static_cast<size_t>(order) + 1);
  t[0] = inv0;
  for (int n = 1; n <= order; ++n) {
    Rational acc(0);
    for (int i = 1; i <= n; ++i) {
      const Rational& si = s.coefficient(i);
      if (si.is_zero()) continue;
      acc += seq.binomial(n, i) * si * t[static_cast<size_t>(n - i)];
    }
    t[static_cast<size_t>(n)] = -acc * inv0;
  }
  return OperatorSeries(seq, std::move(t), order);
}

Polynomial apply_series(const OperatorSeries& a, const Polynomial& p) {
  if (p.degree() > a.order()) {
    throw TruncationError("series of order " + std::to_string(a.order()) +
                          " applied to polynomial of degree " + std::to_string(p.degree()));
  }
  const auto& seq = a.sequence();
  Polynomial acc;
  Polynomial derivative = p;
  for (int n = 0; !derivative.is_zero(); ++n) {
    const Rational& c = a.coefficient(n);
    if (!c.is_zero()) acc += derivative * (c / seq.factorial(n));
    derivative = psi_derivative(seq, derivative);
  }
  return acc;
}

OperatorSeries delta_from_translation(const PsiSequence& seq, int order) {
  if (order < 1) throw DomainError("Delta_psi needs order >= 1");
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(1));
  c[0] = Rational(0);
  return OperatorSeries(seq, std::move(c), order);
}

OperatorSeries factor_derivative(const OperatorSeries& q) {
  if (!q.is_delta()) throw DomainError("series is not a delta operator (need c0 = 0, c1 != 0)");
  const auto& seq = q.sequence();
  std::vector<Rational> s(static_cast<size_t>(q.order()));
  for (int k = 0; k + 1 <= q.order(); ++k) {
    s[static_cast<size_t>(k)] = q.coefficient(k + 1) / seq.number(k + 1);
  }
  return OperatorSeries(seq, std::move(s), q.order() - 1);
}

}  // namespace efoc
