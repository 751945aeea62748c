#include "efoc/stirling.hpp"

#include <string>

#include "efoc/errors.hpp"

namespace efoc {

StirlingTable::StirlingTable(PsiSequence seq, StirlingVariant variant)
    : seq_(std::move(seq)), variant_(variant) {
  if (variant_ == StirlingVariant::GaussSecond && seq_.kind() != PsiSequence::Kind::GaussQ) {
    throw DomainError("Carlitz q-Stirling table needs a GaussQ sequence, got " +
                      seq_.descriptor());
  }
}

std::vector<Rational> StirlingTable::next_row() const {
  const int m = static_cast<int>(rows_.size());
  std::vector<Rational> row(static_cast<size_t>(m) + 1);
  if (m == 0) {
    row[0] = Rational(1);
    return row;
  }
  const auto& prev = rows_.back();
  const auto prev_at = [&](int k) -> Rational {
    return (k < 0 || k >= static_cast<int>(prev.size())) ? Rational(0) : prev[static_cast<size_t>(k)];
  };

  switch (variant_) {
    case StirlingVariant::SecondTilde:
      for (int k = 1; k <= m; ++k) {
        row[static_cast<size_t>(k)] = prev_at(k - 1) + seq_.number(k) * prev_at(k);
      }
      break;
    case StirlingVariant::FirstTilde: {
      // psi_m(x) = psi_{m-1}(x) (x - (m-1)_psi)
      const Rational node = seq_.number(m - 1);
      for (int r = 1; r <= m; ++r) {
        row[static_cast<size_t>(r)] = prev_at(r - 1) - node * prev_at(r);
      }
      break;
    }
    case StirlingVariant::WhitneyC: {
      const Rational node = seq_.number(m - 1);
      for (int r = 1; r <= m; ++r) {
        row[static_cast<size_t>(r)] = prev_at(r - 1) + node * prev_at(r);
      }
      break;
    }
    case StirlingVariant::GaussSecond: {
      const int n = m - 1;
      const Rational& q = seq_.q();
      const auto classical = PsiSequence::classical();
      for (int k = 1; k <= m; ++k) {
        Rational acc(0);
        Rational q_pow(1);
        for (int l = 0; l <= n; ++l) {
          const auto& src = rows_[static_cast<size_t>(l)];
          if (k - 1 < static_cast<int>(src.size())) {
            const Rational& entry = src[static_cast<size_t>(k - 1)];
            if (!entry.is_zero()) acc += classical.binomial(n, l) * q_pow * entry;
          }
          q_pow *= q;
        }
        row[static_cast<size_t>(k)] = acc;
      }
      break;
    }
  }
  return row;
}

void StirlingTable::fill_to(int n) const {
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(rows_.size()) > n) return;
  }
  std::unique_lock lock(mutex_);
  while (static_cast<int>(rows_.size()) <= n) rows_.push_back(next_row());
}

Rational StirlingTable::at(int n, int k) const {
  if (n < 0 || k < 0) {
    throw DomainError("Stirling indices must be nonnegative (got " + std::to_string(n) + ", " +
                      std::to_string(k) + ")");
  }
  if (k > n) return Rational(0);
  fill_to(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

std::vector<Rational> StirlingTable::row(int n) const {
  if (n < 0) throw DomainError("negative Stirling row index");
  fill_to(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<size_t>(n)];
}

Rational StirlingTable::row_sum(int n) const {
  Rational acc(0);
  for (const auto& v : row(n)) acc += v;
  return acc;
}

Rational stirling2(const PsiSequence& seq, int n, int k) {
  return StirlingTable(seq, StirlingVariant::SecondTilde).at(n, k);
}

Rational stirling2_explicit(const PsiSequence& seq, int n, int k, std::uint64_t cap) {
  if (n < 0 || k < 0) throw DomainError("Stirling indices must be nonnegative");
  if (k > n) return Rational(0);
  if (k == 0) return Rational(n == 0 ? 1 : 0);

  const int total = n - k;
  // binom(n-1, k-1) compositions; stop counting once past the cap.
  {
    mpz_class count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(n - 1),
                 static_cast<unsigned long>(k - 1));
    if (count > mpz_class(std::to_string(cap))) {
      throw BudgetError("enumerating " + count.get_str() + " compositions for {" +
                        std::to_string(n) + " " + std::to_string(k) + "} exceeds cap " +
                        std::to_string(cap));
    }
  }

  std::vector<Rational> atoms(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) atoms[static_cast<size_t>(i - 1)] = seq.number(i);

  // Depth-first walk over every weak composition d_1 + ... + d_k = total;
  // each leaf contributes one monomial 1_psi^d_1 ... k_psi^d_k.
  Rational sum(0);
  const auto walk = [&](auto&& self, int part, int remaining, const Rational& prefix) -> void {
    const Rational& atom = atoms[static_cast<size_t>(part)];
    if (part == k - 1) {
      sum += prefix * atom.pow(remaining);
      return;
    }
    Rational factor(1);
    for (int d = 0; d <= remaining; ++d) {
      self(self, part + 1, remaining - d, prefix * factor);
      factor *= atom;
    }
  };
  walk(walk, 0, total, Rational(1));
  return sum;
}

std::vector<Rational> ogf_column(const PsiSequence& seq, int k, int D) {
  if (k < 0 || D < 0) throw DomainError("ogf_column needs k, D >= 0");
  std::vector<Rational> series(static_cast<size_t>(D) + 1);
  if (k > D) return series;
  series[static_cast<size_t>(k)] = Rational(1);  // x^k
  for (int j = 1; j <= k; ++j) {
    // multiply by 1/(1 - j_psi x) = sum_m (j_psi x)^m: running prefix form
    // s'_n = s_n + j_psi s'_{n-1}.
    const Rational a = seq.number(j);
    for (int n = 1; n <= D; ++n) {
      series[static_cast<size_t>(n)] += a * series[static_cast<size_t>(n - 1)];
    }
  }
  return series;
}

Rational bell(const PsiSequence& seq, int n) {
  return StirlingTable(seq, StirlingVariant::SecondTilde).row_sum(n);
}

Polynomial exp_polynomial(const PsiSequence& seq, int n) {
  if (n < 0) throw DomainError("exp_polynomial needs n >= 0");
  Polynomial a = Polynomial::constant(Rational(1));
  for (int step = 0; step < n; ++step) {
    // y (1 + d_psi): coefficient b_k = a_{k-1} + k_psi a_k
    std::vector<Rational> next(static_cast<size_t>(a.degree()) + 2);
    for (int k = 0; k <= a.degree(); ++k) {
      next[static_cast<size_t>(k) + 1] += a.coefficient(k);
      if (k >= 1) next[static_cast<size_t>(k)] += seq.number(k) * a.coefficient(k);
    }
    a = Polynomial(std::move(next));
  }
  return a;
}

Rational exp_polynomial(const PsiSequence& seq, int n, const Rational& y) {
  return exp_polynomial(seq, n)(y);
}

Rational stirling1(const PsiSequence& seq, int k, int r) {
  return StirlingTable(seq, StirlingVariant::FirstTilde).at(k, r);
}

Rational whitney_c(const PsiSequence& seq, int k, int r) {
  return StirlingTable(seq, StirlingVariant::WhitneyC).at(k, r);
}

bool orthogonality_check(const PsiSequence& seq, int N) {
  const StirlingTable first(seq, StirlingVariant::FirstTilde);
  const StirlingTable second(seq, StirlingVariant::SecondTilde);
  for (int k = 0; k <= N; ++k) {
    for (int l = 0; l <= N; ++l) {
      Rational acc(0);
      for (int r = l; r <= k; ++r) acc += first.at(k, r) * second.at(r, l);
      if (acc != Rational(k == l ? 1 : 0)) return false;
    }
  }
  return true;
}

Rational stirling2_gauss(const Rational& q, int n, int k) {
  return StirlingTable(PsiSequence::gauss_q(q), StirlingVariant::GaussSecond).at(n, k);
}

Rational stirling2_gauss_nodal(const Rational& q, int n, int k) {
  if (n < 0 || k < 0) throw DomainError("Stirling indices must be nonnegative");
  if (k > n) return Rational(0);
  const auto seq = PsiSequence::gauss_q(q);
  const auto coeffs = to_basis(Polynomial::monomial(n), seq, BasisKind::PsiFalling);
  const long binom_k2 = static_cast<long>(k) * (k - 1) / 2;
  return coeffs[static_cast<size_t>(k)] * q.pow(binom_k2);
}

Rational bell_gauss(const Rational& q, int n) {
  if (n < 0) throw DomainError("bell_gauss needs n >= 0");
  static_cast<void>(PsiSequence::gauss_q(q));
  const auto classical = PsiSequence::classical();
  std::vector<Rational> b{Rational(1)};
  for (int m = 0; m < n; ++m) {
    Rational acc(0);
    Rational q_pow(1);
    for (int l = 0; l <= m; ++l) {
      acc += classical.binomial(m, l) * q_pow * b[static_cast<size_t>(l)];
      q_pow *= q;
    }
    b.push_back(acc);
  }
  return b[static_cast<size_t>(n)];
}

}  // namespace efoc
