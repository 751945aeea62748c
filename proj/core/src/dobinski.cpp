#include "efoc/dobinski.hpp"

#include <string>

#include "efoc/errors.hpp"
#include "efoc/stirling.hpp"

namespace efoc {

namespace {

Rational gauss_prefactor(const Rational& q, int r) {
  if (q.is_zero()) throw DomainError("q-Dobinski weights need q != 0 (q^-binom(r,2))");
  return q.pow(-static_cast<long>(r) * (r - 1) / 2);
}

void require_gauss(const PsiSequence& seq) {
  if (seq.kind() != PsiSequence::Kind::GaussQ) {
    throw DomainError("Gauss prefactor requested for non-GaussQ sequence " + seq.descriptor());
  }
}

}  // namespace

void TruncationSpec::validate() const {
  if (R < 0 || K < R) {
    throw DomainError("truncation needs 0 <= R <= K (got R = " + std::to_string(R) +
                      ", K = " + std::to_string(K) + ")");
  }
}

Rational epsilon_generic(const PsiSequence& seq, int r, int K) {
  if (r < 0 || K < r) throw DomainError("epsilon needs 0 <= r <= K");
  Rational sum(0);
  for (int k = r; k <= K; ++k) {
    const Rational term = seq.factorial(k - r).inverse();
    if ((k - r) % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

Rational epsilon_gauss(const Rational& q, int r, int K) {
  const Rational prefactor = gauss_prefactor(q, r);
  return epsilon_generic(PsiSequence::gauss_q(q), r, K) * prefactor;
}

Rational dobinski_term(const PsiSequence& seq, int n, int r, int K, bool use_gauss_prefactor) {
  if (n < 0) throw DomainError("Dobinski index n must be nonnegative");
  Rational weight = epsilon_generic(seq, r, K);
  if (use_gauss_prefactor) {
    require_gauss(seq);
    weight *= gauss_prefactor(seq.q(), r);
  }
  // r_psi^n with 0^0 = 1
  return weight * seq.number(r).pow(n) / seq.factorial(r);
}

Rational dobinski_partial(const PsiSequence& seq, int n, const TruncationSpec& spec,
                          bool use_gauss_prefactor) {
  spec.validate();
  if (n < 0) throw DomainError("Dobinski index n must be nonnegative");
  if (use_gauss_prefactor) require_gauss(seq);

  // eps(r, K) only depends on K - r: precompute the alternating partial sums.
  std::vector<Rational> alt(static_cast<size_t>(spec.K) + 1);
  Rational running(0);
  for (int j = 0; j <= spec.K; ++j) {
    const Rational term = seq.factorial(j).inverse();
    if (j % 2) running -= term;
    else running += term;
    alt[static_cast<size_t>(j)] = running;
  }

  Rational sum(0);
  for (int r = 0; r <= spec.R; ++r) {
    const Rational power = seq.number(r).pow(n);
    if (power.is_zero()) continue;
    Rational weight = alt[static_cast<size_t>(spec.K - r)];
    if (use_gauss_prefactor) weight *= gauss_prefactor(seq.q(), r);
    sum += weight * power / seq.factorial(r);
  }
  return sum;
}

Rational psi_exponential(const PsiSequence& seq, const Rational& t, int N) {
  if (N < 0) throw DomainError("psi_exponential needs N >= 0");
  Rational sum(0);
  Rational power(1);
  for (int n = 0; n <= N; ++n) {
    sum += power / seq.factorial(n);
    power *= t;
  }
  return sum;
}

ConvergenceReport bell_egf_check(const PsiSequence& seq, int n, const TruncationSpec& spec,
                                 int degree) {
  spec.validate();
  if (n < 0 || degree < n) throw DomainError("bell_egf_check needs 0 <= n <= degree");

  // Coefficients of x^m, m <= degree, in sum_r eps(r) e_psi[r_psi x] / r_psi!.
  std::vector<Rational> series(static_cast<size_t>(degree) + 1);
  for (int r = 0; r <= spec.R; ++r) {
    const Rational weight = epsilon_generic(seq, r, spec.K) / seq.factorial(r);
    const Rational node = seq.number(r);
    Rational power(1);
    for (int m = 0; m <= degree; ++m) {
      if (!power.is_zero()) series[static_cast<size_t>(m)] += weight * power / seq.factorial(m);
      power *= node;
    }
  }

  ConvergenceReport report;
  report.target = bell(seq, n);
  report.levels.push_back(spec.R);
  report.partial_sums.push_back(series[static_cast<size_t>(n)] * seq.factorial(n));
  report.residuals.push_back((report.partial_sums.back() - report.target).abs());
  return report;
}

ConvergenceReport dobinski_report(const PsiSequence& seq, int n, const std::vector<int>& levels,
                                  bool use_gauss_prefactor) {
  ConvergenceReport report;
  report.target = bell(seq, n);
  for (int level : levels) {
    const Rational partial =
        dobinski_partial(seq, n, TruncationSpec::square(level), use_gauss_prefactor);
    report.levels.push_back(level);
    report.residuals.push_back((partial - report.target).abs());
    report.partial_sums.push_back(partial);
  }
  return report;
}

}  // namespace efoc
