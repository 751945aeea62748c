#pragma once

// psi-Appell families attached to a delta operator Q = d_psi S and the
// solver for Q f = phi on polynomials.

#include <vector>

#include "efoc/operators.hpp"
#include "efoc/polynomial.hpp"
#include "efoc/rational.hpp"
#include "efoc/sequences.hpp"

namespace efoc {

struct AppellFamily {
  PsiSequence seq;
  OperatorSeries q_operator;             // delta operator Q
  OperatorSeries appell_operator;        // S^-1 = sum A_n / n_psi! d_psi^n
  std::vector<Rational> appell_numbers;  // A_n
  std::vector<Polynomial> polynomials;   // A_n(x) = S^-1 x^n

  int size() const { return static_cast<int>(polynomials.size()); }
};

/// Builds A_0(x)..A_N(x). Q must be a delta series known to order N + 1
/// (the Appell operator S^-1 then has order N).
AppellFamily build_family(const PsiSequence& seq, const OperatorSeries& q, int N);

/// d_psi A_n = n_psi A_(n-1) and Q A_n = n_psi x^(n-1) for n >= 1 (Q A_0 = 0),
/// plus A_n(0) = A_n.
bool verify_family(const AppellFamily& family);

/// E^y A_n == sum_s binom(n,s)_psi A_s(y) x^(n-s) as polynomials.
bool sheffer_appell_check(const AppellFamily& family, int n, const Rational& y);

/// Canonical solution of Q f = phi with zero Q-periodic part:
///   f = A_0 int_psi phi + sum_{n>=1} A_n / n_psi! d_psi^(n-1) phi.
/// Q must be known to order deg(phi) + 2.
Polynomial solve(const PsiSequence& seq, const OperatorSeries& q, const Polynomial& phi);

/// H_n(x) = [sum_k (-1/2)^k d_psi^(2k) / k_psi!] x^n.
Polynomial hermite_psi(const PsiSequence& seq, int n);

/// L_n(x) = (n_psi / n) sum_{k=1}^{n} (-1)^k binom(n,k) (n-1)_psi^(n-k falling) (k / k_psi) x^k
/// with an ordinary integer binomial. DomainError for n < 1.
Polynomial laguerre_psi(const PsiSequence& seq, int n);

}  // namespace efoc
