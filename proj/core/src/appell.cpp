#include "efoc/appell.hpp"

#include <string>

#include "efoc/errors.hpp"

namespace efoc {

namespace {

Rational integer_binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(out));
}

void require_delta(const OperatorSeries& q) {
  if (!q.is_delta()) throw DomainError("Q is not a delta operator (need c0 = 0, c1 != 0)");
}

}  // namespace

AppellFamily build_family(const PsiSequence& seq, const OperatorSeries& q, int N) {
  if (N < 0) throw DomainError("family size N must be nonnegative");
  if (!(q.sequence() == seq)) throw DomainError("Q is defined over a different sequence");
  require_delta(q);
  if (q.order() < N + 1) {
    throw TruncationError("Q known to order " + std::to_string(q.order()) + "; degree " +
                          std::to_string(N) + " family needs order " + std::to_string(N + 1));
  }
  const OperatorSeries appell = series_invert(factor_derivative(q.truncated(N + 1)));

  AppellFamily family{seq, q, appell, {}, {}};
  family.appell_numbers = appell.coefficients();
  family.polynomials.reserve(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    family.polynomials.push_back(apply_series(appell, Polynomial::monomial(n)));
  }
  return family;
}

bool verify_family(const AppellFamily& family) {
  const auto& seq = family.seq;
  for (int n = 0; n < family.size(); ++n) {
    const Polynomial& an = family.polynomials[static_cast<size_t>(n)];
    if (an(Rational(0)) != family.appell_numbers[static_cast<size_t>(n)]) return false;
    if (n == 0) {
      if (!apply_series(family.q_operator, an).is_zero()) return false;
      continue;
    }
    const Rational n_psi = seq.number(n);
    if (psi_derivative(seq, an) != family.polynomials[static_cast<size_t>(n - 1)] * n_psi) {
      return false;
    }
    if (apply_series(family.q_operator, an) != Polynomial::monomial(n - 1, n_psi)) return false;
  }
  return true;
}

bool sheffer_appell_check(const AppellFamily& family, int n, const Rational& y) {
  if (n < 0 || n >= family.size()) throw DomainError("index outside the built family");
  const auto& seq = family.seq;
  const Polynomial lhs = translate(seq, y, family.polynomials[static_cast<size_t>(n)]);
  Polynomial rhs;
  for (int s = 0; s <= n; ++s) {
    const Rational c = seq.binomial(n, s) * family.polynomials[static_cast<size_t>(s)](y);
    rhs += Polynomial::monomial(n - s, c);
  }
  return lhs == rhs;
}

Polynomial solve(const PsiSequence& seq, const OperatorSeries& q, const Polynomial& phi) {
  if (!(q.sequence() == seq)) throw DomainError("Q is defined over a different sequence");
  require_delta(q);
  if (phi.is_zero()) return {};
  const int d = phi.degree();
  if (q.order() < d + 2) {
    throw TruncationError("Q known to order " + std::to_string(q.order()) + "; right-hand side of degree " +
                          std::to_string(d) + " needs order " + std::to_string(d + 2));
  }
  const OperatorSeries appell = series_invert(factor_derivative(q.truncated(d + 2)));

  Polynomial f = psi_integral(seq, phi) * appell.coefficient(0);
  Polynomial derivative = phi;  // phi^(n-1)
  for (int n = 1; !derivative.is_zero(); ++n) {
    const Rational& a = appell.coefficient(n);
    if (!a.is_zero()) f += derivative * (a / seq.factorial(n));
    derivative = psi_derivative(seq, derivative);
  }
  return f;
}

Polynomial hermite_psi(const PsiSequence& seq, int n) {
  if (n < 0) throw DomainError("hermite_psi needs n >= 0");
  Polynomial acc;
  Polynomial derivative = Polynomial::monomial(n);
  const Rational minus_half(-1, 2);
  for (int k = 0; !derivative.is_zero(); ++k) {
    acc += derivative * (minus_half.pow(k) / seq.factorial(k));
    derivative = psi_derivative(seq, psi_derivative(seq, derivative));
  }
  return acc;
}

Polynomial laguerre_psi(const PsiSequence& seq, int n) {
  if (n < 1) throw DomainError("laguerre_psi is defined for n >= 1");
  const Rational prefactor = seq.number(n) / Rational(n);
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    Rational term = integer_binomial(n, k) * seq.falling(n - 1, n - k) * Rational(k) / seq.number(k);
    if (k % 2) term = -term;
    coeffs[static_cast<size_t>(k)] = prefactor * term;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace efoc
