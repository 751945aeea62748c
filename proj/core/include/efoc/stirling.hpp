#pragma once

// psi-extended Stirling numbers.
//
//   Second~   {n k}~: x^n = sum_k {n k}~ psi_k(x) with the falling nodal
//             basis psi_k(x) = x (x - 1_psi) ... (x - [k-1]_psi).
//             {n+1 k} = {n k-1} + k_psi {n k}.
//   First~    [k r]~: psi_k(x) = sum_r [k r]~ x^r.
//             [k+1 r] = [k r-1] - k_psi [k r].
//   WhitneyC  [k r]^c: x (x + 1_psi) ... (x + [k-1]_psi) = sum_r [k r]^c x^r.
//             [k+1 r] = [k r-1] + k_psi [k r].
//   GaussSecond  Carlitz q-Stirling {n k}_q with
//             {n+1 k} = sum_l binom(n,l) q^l {l k-1}, {0 0} = 1, {n 0} = delta_n0.
//
// All tables satisfy T(0,0) = 1, T(n,0) = delta_n0 and T(n,k) = 0 for k > n.

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "efoc/polynomial.hpp"
#include "efoc/rational.hpp"
#include "efoc/sequences.hpp"

namespace efoc {

enum class StirlingVariant { SecondTilde, FirstTilde, WhitneyC, GaussSecond };

/// Memoized lower-triangular table. Rows are filled on demand; concurrent
/// readers are allowed and concurrent fills are idempotent.
class StirlingTable {
 public:
  /// GaussSecond requires a GaussQ sequence (DomainError otherwise).
  StirlingTable(PsiSequence seq, StirlingVariant variant);

  StirlingTable(const StirlingTable&) = delete;
  StirlingTable& operator=(const StirlingTable&) = delete;

  const PsiSequence& sequence() const { return seq_; }
  StirlingVariant variant() const { return variant_; }

  /// Entry (n, k); zero for k > n. DomainError for negative indices.
  Rational at(int n, int k) const;
  /// Row n, entries k = 0..n.
  std::vector<Rational> row(int n) const;
  Rational row_sum(int n) const;

 private:
  void fill_to(int n) const;
  std::vector<Rational> next_row() const;

  PsiSequence seq_;
  StirlingVariant variant_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<Rational>> rows_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

Rational stirling2(const PsiSequence& seq, int n, int k);

/// Independent oracle: enumerates weak compositions d_1 + ... + d_k = n - k
/// and sums 1_psi^d_1 2_psi^d_2 ... k_psi^d_k. Throws BudgetError when the
/// number of compositions, binom(n-1, k-1), exceeds `cap`.
Rational stirling2_explicit(const PsiSequence& seq, int n, int k,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// First D+1 coefficients of x^k / ((1 - 1_psi x)(1 - 2_psi x)...(1 - k_psi x)).
std::vector<Rational> ogf_column(const PsiSequence& seq, int k, int D);

/// B~_n(psi) = sum_k {n k}~.
Rational bell(const PsiSequence& seq, int n);

/// A~_n(psi, y) = [y (1 + d_psi)]^n 1 as a polynomial in y.
Polynomial exp_polynomial(const PsiSequence& seq, int n);
Rational exp_polynomial(const PsiSequence& seq, int n, const Rational& y);

Rational stirling1(const PsiSequence& seq, int k, int r);
Rational whitney_c(const PsiSequence& seq, int k, int r);

/// True iff sum_r [k r]~ {r l}~ = delta_kl for all k, l <= N.
bool orthogonality_check(const PsiSequence& seq, int N);

/// Carlitz q-Stirling number of the second kind via its recurrence.
Rational stirling2_gauss(const Rational& q, int n, int k);

/// Same number by a second route: expand t^n in the nodal basis
/// prod_{j<k} (t - j_q) and rescale by q^binom(k,2). Uses the identity
/// x_q - j_q = q^j (x-j)_q, so prod_{j<k} (x_q - j_q) = q^binom(k,2) x_q^(k falling).
Rational stirling2_gauss_nodal(const Rational& q, int n, int k);

/// B_q(n+1) = sum_l binom(n,l) q^l B_q(l), B_q(0) = 1.
Rational bell_gauss(const Rational& q, int n);

}  // namespace efoc
