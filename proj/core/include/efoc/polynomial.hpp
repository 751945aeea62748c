#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "efoc/rational.hpp"
#include "efoc/sequences.hpp"

namespace efoc {

/// Dense univariate polynomial over Rational. coefficients()[i] is the
/// coefficient of x^i; trailing zeros are never stored, so the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int degree, const Rational& c = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coefficient(int i) const;

  /// Horner evaluation.
  Rational operator()(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Text form "c0 c1 c2 ...", ascending degree; "0" for the zero polynomial.
  std::string to_string() const;
  static Polynomial parse(std::string_view text);
  /// Human-readable "x^2 - x + 1/6".
  std::string pretty(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Rational eval(const Polynomial& p, const Rational& t);
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& p, const Rational& c);

enum class BasisKind {
  Monomial,    // x^k
  PsiFalling,  // x (x - 1_psi) (x - 2_psi) ... (x - [k-1]_psi)
  PsiRising,   // x (x + 1_psi) (x + 2_psi) ... (x + [k-1]_psi)
};

/// Monic degree-k basis polynomial expanded in monomials.
Polynomial basis_element(const PsiSequence& seq, BasisKind kind, int k);

/// Coefficients c_k with p = sum_k c_k basis_element(k). Computed by
/// repeated synthetic division by the node sequence (j_psi for falling,
/// -j_psi for rising), i.e. the Newton form of p.
std::vector<Rational> to_basis(const Polynomial& p, const PsiSequence& seq, BasisKind kind);

/// Inverse of to_basis: nested Horner evaluation of the Newton form.
Polynomial from_basis(const std::vector<Rational>& coeffs, const PsiSequence& seq,
                      BasisKind kind);

}  // namespace efoc
