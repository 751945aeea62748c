#pragma once

// Admissible psi-sequences in upside-down notation.
//
// Every formula in the library consumes only the atoms n_psi (and their
// products), so a sequence is described by how it produces n_psi:
//
//   Classical    n_psi = n                 (psi_n = 1/n!)
//   GaussQ(q)    n_psi = 1 + q + ... + q^(n-1) = (1 - q^n)/(1 - q)
//   Fibonomial   n_psi = F_n               (F_1 = F_2 = 1)
//   Custom       n_psi read from a user supplied list, index 1 first
//
// 0_psi is 0 for every kind. Values are memoized per sequence instance and
// the memo is shared between copies.

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "efoc/rational.hpp"

namespace efoc {

class PsiSequence {
 public:
  enum class Kind { Classical, GaussQ, Fibonomial, Custom };

  static PsiSequence classical();
  /// Rejects q = 1 with DomainError (use classical()).
  static PsiSequence gauss_q(const Rational& q);
  static PsiSequence fibonomial();
  /// `values[i]` is (i+1)_psi. Every entry must be nonzero.
  static PsiSequence custom(std::vector<Rational> values);
  /// Reads the custom-sequence text format: one rational per line, line i
  /// holding i_psi, '#' starting a comment line, blank lines ignored.
  static PsiSequence custom_from_file(const std::filesystem::path& path);
  static PsiSequence custom_from_text(std::string_view text);

  Kind kind() const;
  /// q for GaussQ; throws DomainError for other kinds.
  const Rational& q() const;
  /// Stable descriptor such as "classical", "q:3/7", "fibonomial",
  /// "custom[1,2,5/2]". Two sequences compare equal iff descriptors match.
  const std::string& descriptor() const;

  /// n_psi. DomainError for n < 0 or beyond a custom list,
  /// AdmissibilityError when the value at n >= 1 is zero.
  Rational number(int n) const;
  /// n_psi! = n_psi (n-1)_psi!, 0_psi! = 1.
  Rational factorial(int n) const;
  /// n_psi! / (k_psi! (n-k)_psi!); zero outside 0 <= k <= n.
  Rational binomial(int n, int k) const;
  /// n_psi (n-1)_psi ... (n-k+1)_psi for integer n; zero once the product
  /// reaches index 0.
  Rational falling(int n, int k) const;

  friend bool operator==(const PsiSequence& a, const PsiSequence& b);

 private:
  struct Impl;
  explicit PsiSequence(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;
};

inline Rational psi_number(const PsiSequence& seq, int n) { return seq.number(n); }
inline Rational psi_factorial(const PsiSequence& seq, int n) { return seq.factorial(n); }
inline Rational psi_binomial(const PsiSequence& seq, int n, int k) { return seq.binomial(n, k); }
inline Rational psi_falling(const PsiSequence& seq, int n, int k) { return seq.falling(n, k); }

}  // namespace efoc
