#pragma once

// Truncated Dobinski-like series for psi-Bell numbers.
//
//   eps(psi, r)  = sum_{k >= r} (-1)^(k-r) / (k-r)_psi!
//   B~_n(psi)    = sum_{r >= 0} eps(psi, r) r_psi^n / r_psi!
//   eps_q(q, r)  = q^(-binom(r,2)) sum_{k >= r} (-1)^(k-r) / (k-r)_q!
//
// Both sums are infinite; TruncationSpec caps the outer index r at R and
// the inner index k at K. All partial sums are exact rationals.

#include <vector>

#include "efoc/rational.hpp"
#include "efoc/sequences.hpp"

namespace efoc {

struct TruncationSpec {
  int R = 0;  // outer limit, r = 0..R
  int K = 0;  // inner limit, k = r..K

  /// DomainError unless 0 <= R <= K.
  void validate() const;
  static TruncationSpec square(int level) { return {level, level}; }
};

struct ConvergenceReport {
  std::vector<int> levels;              // truncation level of each entry (R = K)
  std::vector<Rational> partial_sums;   // exact partial sums
  std::vector<Rational> residuals;      // |partial_sums[i] - target|
  Rational target;                      // exact Bell value
};

/// The truncation schedule used by convergence reports.
inline const std::vector<int>& doubling_schedule() {
  static const std::vector<int> levels{8, 16, 32, 64};
  return levels;
}

Rational epsilon_generic(const PsiSequence& seq, int r, int K);
/// DomainError for q = 0; q = 1 is rejected by PsiSequence::gauss_q.
Rational epsilon_gauss(const Rational& q, int r, int K);

/// sum_{r=0}^{R} eps(., r, K) r_psi^n / r_psi!. With `use_gauss_prefactor`
/// the weights are eps_q (seq must be GaussQ).
Rational dobinski_partial(const PsiSequence& seq, int n, const TruncationSpec& spec,
                          bool use_gauss_prefactor = false);

/// The r-th term of the outer Dobinski series at inner truncation K.
Rational dobinski_term(const PsiSequence& seq, int n, int r, int K,
                       bool use_gauss_prefactor = false);

/// e_psi(t) = sum_{n=0}^{N} t^n / n_psi!
Rational psi_exponential(const PsiSequence& seq, const Rational& t, int N);

/// Builds sum_{r<=R} eps(psi,r) e_psi[r_psi x] / r_psi! as a power series in x
/// truncated at `degree`, extracts n_psi! [x^n] and compares with bell(seq, n).
ConvergenceReport bell_egf_check(const PsiSequence& seq, int n, const TruncationSpec& spec,
                                 int degree);

/// Dobinski partial sums at square truncations R = K = level for each level.
ConvergenceReport dobinski_report(const PsiSequence& seq, int n, const std::vector<int>& levels,
                                  bool use_gauss_prefactor = false);

}  // namespace efoc
