#pragma once

// The psi-derivative d_psi x^n = n_psi x^(n-1), its right inverse, and
// formal series in d_psi.
//
// An OperatorSeries stores c_0..c_N for the operator
//
//     sum_{k=0}^{N} c_k / k_psi! * d_psi^k
//
// i.e. the normalized form in which Q, S, the Appell operator and the
// generalized translation E^a are written. N is the truncation order: the
// series is known modulo d_psi^(N+1), and applying it to a polynomial of
// degree > N is a TruncationError.

#include <string>
#include <string_view>
#include <vector>

#include "efoc/polynomial.hpp"
#include "efoc/rational.hpp"
#include "efoc/sequences.hpp"

namespace efoc {

class OperatorSeries {
 public:
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  OperatorSeries(PsiSequence seq, std::vector<Rational> coeffs, int order);

  static OperatorSeries identity(const PsiSequence& seq, int order);
  /// d_psi itself: c_1 = 1_psi!.
  static OperatorSeries derivative(const PsiSequence& seq, int order);
  /// Parses "c0 c1 c2 ..."; the order is the number of entries minus one.
  static OperatorSeries parse(const PsiSequence& seq, std::string_view text);

  const PsiSequence& sequence() const { return seq_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(int k) const;

  bool is_invertible() const { return !coeffs_[0].is_zero(); }
  bool is_delta() const { return coeffs_[0].is_zero() && order() >= 1 && !coeffs_[1].is_zero(); }

  /// Same series known to a lower order.
  OperatorSeries truncated(int order) const;
  std::string to_string() const;

  friend bool operator==(const OperatorSeries& a, const OperatorSeries& b);

 private:
  PsiSequence seq_;
  std::vector<Rational> coeffs_;
};

Polynomial psi_derivative(const PsiSequence& seq, const Polynomial& p);
/// Right inverse of psi_derivative with zero constant of integration:
/// x^n -> x^(n+1) / (n+1)_psi.
Polynomial psi_integral(const PsiSequence& seq, const Polynomial& p);
/// E^a p = sum_n a^n / n_psi! d_psi^n p.
Polynomial translate(const PsiSequence& seq, const Rational& a, const Polynomial& p);

/// Product in the d_psi algebra, truncated to the smaller order. In the
/// normalized convention c_n = sum_i binom(n,i)_psi a_i b_(n-i).
/// DomainError if the sequences differ.
OperatorSeries series_mul(const OperatorSeries& a, const OperatorSeries& b);
/// T with S T = identity to S's order; NotInvertibleError if c_0 = 0.
OperatorSeries series_invert(const OperatorSeries& s);
/// sum_n c_n / n_psi! d_psi^n p; TruncationError if deg p > order.
Polynomial apply_series(const OperatorSeries& a, const Polynomial& p);

/// Delta_psi = E^1(d_psi) - id, i.e. c_0 = 0 and c_k = 1 for k >= 1.
OperatorSeries delta_from_translation(const PsiSequence& seq, int order);

/// For a delta series Q returns S with Q = d_psi S (S invertible, one
/// order lower): s_k = q_(k+1) / (k+1)_psi. DomainError if Q is not delta.
OperatorSeries factor_derivative(const OperatorSeries& q);

}  // namespace efoc
