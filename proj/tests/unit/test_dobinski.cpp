#include <doctest.h>

#include "efoc/dobinski.hpp"
#include "efoc/errors.hpp"
#include "efoc/stirling.hpp"
#include "support/oracles.hpp"

using efoc::PsiSequence;
using efoc::Rational;
using efoc::TruncationSpec;
namespace oracle = efoc::oracle;

namespace {

const std::string kTenTo40 = "1" + std::string(40, '0');
// 40-digit decimal expansions used as independent references.
const Rational kInvE = Rational::parse("3678794411714423215955237701614608674458/" + kTenTo40);
const Rational kE = Rational::parse("27182818284590452353602874713526624977572/" + kTenTo40);
const Rational kTol18 = Rational::parse("1/1000000000000000000");
const Rational kTol9 = Rational(1, 1000000000);

}  // namespace

TEST_CASE("epsilon_generic examples") {
  for (const auto& seq : oracle::builtin_sequences()) {
    for (int r = 0; r <= 5; ++r) CHECK(epsilon_generic(seq, r, r) == Rational(1));
  }
  CHECK((epsilon_generic(PsiSequence::classical(), 0, 20) - kInvE).abs() < kTol18);
  const auto half = PsiSequence::gauss_q(Rational(1, 2));
  CHECK(epsilon_generic(half, 1, 1) - epsilon_generic(half, 1, 2) ==
        psi_factorial(half, 1).inverse());
  CHECK_THROWS_AS(epsilon_generic(half, 3, 2), efoc::DomainError);
}

TEST_CASE("epsilon_gauss examples") {
  for (int K = 0; K <= 12; ++K) {
    for (const Rational q : {Rational(1, 2), Rational(2), Rational(3, 7)}) {
      REQUIRE(epsilon_gauss(q, 0, K) == epsilon_generic(PsiSequence::gauss_q(q), 0, K));
    }
  }
  CHECK(epsilon_gauss(Rational(2), 2, 2) == Rational(1, 2));
  CHECK(epsilon_gauss(Rational(3), 3, 3) == Rational(1, 27));
  CHECK_THROWS_AS(epsilon_gauss(Rational(0), 1, 3), efoc::DomainError);
  CHECK_THROWS_AS(epsilon_gauss(Rational(1), 1, 3), efoc::DomainError);
}

TEST_CASE("truncation spec validation") {
  CHECK_THROWS_AS(TruncationSpec({5, 4}).validate(), efoc::DomainError);
  CHECK_THROWS_AS(TruncationSpec({-1, 4}).validate(), efoc::DomainError);
  CHECK_NOTHROW(TruncationSpec({4, 4}).validate());
}

TEST_CASE("dobinski_partial examples") {
  const auto classical = PsiSequence::classical();
  CHECK((dobinski_partial(classical, 0, {40, 40}) - Rational(1)).abs() < kTol9);
  CHECK((dobinski_partial(classical, 2, {60, 60}) - Rational(2)).abs() < kTol9);
  for (const auto& seq : oracle::builtin_sequences()) {
    CHECK(dobinski_partial(seq, 0, {0, 0}) == Rational(1));
    CHECK(dobinski_partial(seq, 3, {0, 0}) == Rational(0));
  }
  CHECK_THROWS_AS(dobinski_partial(classical, 2, {3, 3}, true), efoc::DomainError);
}

TEST_CASE("dobinski_partial agrees with the term-by-term definition") {
  for (const auto& seq : oracle::builtin_sequences()) {
    for (int n = 0; n <= 4; ++n) {
      const TruncationSpec spec{6, 9};
      Rational direct(0);
      for (int r = 0; r <= spec.R; ++r) {
        direct += epsilon_generic(seq, r, spec.K) * psi_number(seq, r).pow(n) / psi_factorial(seq, r);
      }
      REQUIRE(dobinski_partial(seq, n, spec) == direct);
      Rational via_terms(0);
      for (int r = 0; r <= spec.R; ++r) via_terms += efoc::dobinski_term(seq, n, r, spec.K);
      REQUIRE(via_terms == direct);
    }
  }
  const auto q2 = PsiSequence::gauss_q(Rational(2));
  Rational direct(0);
  for (int r = 0; r <= 5; ++r) {
    direct += epsilon_gauss(Rational(2), r, 7) * psi_number(q2, r).pow(3) / psi_factorial(q2, r);
  }
  CHECK(dobinski_partial(q2, 3, {5, 7}, true) == direct);
}

TEST_CASE("classical Dobinski converges to the Bell numbers") {
  const auto classical = PsiSequence::classical();
  for (int n = 0; n <= 10; ++n) {
    const Rational target = efoc::bell(classical, n);
    Rational previous;
    bool have_previous = false;
    for (int level = n; level <= 24; ++level) {
      const Rational residual = (dobinski_partial(classical, n, TruncationSpec::square(level)) - target).abs();
      if (have_previous) REQUIRE(residual <= previous);
      previous = residual;
      have_previous = true;
    }
    REQUIRE((dobinski_partial(classical, n, {60, 60}) - target).abs() < kTol9);
  }
}

TEST_CASE("outer Dobinski term ratio") {
  // q = 2: eventually below 1/2.
  const auto q2 = PsiSequence::gauss_q(Rational(2));
  for (int n = 0; n <= 6; ++n) {
    const int K = 80;
    const Rational ratio = (efoc::dobinski_term(q2, n, 41, K) / efoc::dobinski_term(q2, n, 40, K)).abs();
    CHECK(ratio < Rational(1, 2));
  }
  // q = 1/2: (r+1)_q -> 2 from below, so the ratio tends to 1/2 from above
  // (convergent, but never below 1/2). K is large enough that eps(r, K) is
  // flat in r to far below 2^-41.
  const auto half = PsiSequence::gauss_q(Rational(1, 2));
  for (int n = 0; n <= 6; ++n) {
    const int K = 200;
    const Rational ratio =
        (efoc::dobinski_term(half, n, 41, K) / efoc::dobinski_term(half, n, 40, K)).abs();
    CHECK(ratio > Rational(1, 2));
    CHECK(ratio < Rational(51, 100));
  }
}

TEST_CASE("psi_exponential") {
  for (const auto& seq : oracle::builtin_sequences()) CHECK(psi_exponential(seq, Rational(0), 9) == Rational(1));
  CHECK((psi_exponential(PsiSequence::classical(), Rational(1), 20) - kE).abs() < kTol18);
  CHECK(psi_exponential(PsiSequence::fibonomial(), Rational(1), 5) ==
        Rational(1) + Rational(1) + Rational(1) + Rational(1, 2) + Rational(1, 6) + Rational(1, 30));
}

TEST_CASE("bell_egf_check") {
  const auto classical = PsiSequence::classical();
  const auto report = bell_egf_check(classical, 3, {60, 60}, 10);
  CHECK(report.target == Rational(5));
  REQUIRE(report.residuals.size() == 1);
  CHECK(report.residuals[0] < kTol9);
  CHECK(bell_egf_check(classical, 0, {30, 30}, 4).residuals[0] < kTol9);
  const auto single = bell_egf_check(PsiSequence::fibonomial(), 2, {0, 0}, 2);
  CHECK(single.partial_sums.size() == 1);
  CHECK(single.partial_sums[0] == Rational(0));
  CHECK(single.residuals[0] == single.target);
  // the coefficient extraction reproduces the Dobinski partial sum
  for (const auto& seq : oracle::builtin_sequences()) {
    for (int n = 0; n <= 5; ++n) {
      REQUIRE(bell_egf_check(seq, n, {7, 9}, 8).partial_sums[0] == dobinski_partial(seq, n, {7, 9}));
    }
  }
  CHECK_THROWS_AS(bell_egf_check(classical, 5, {3, 3}, 4), efoc::DomainError);
}

TEST_CASE("dobinski_report follows the doubling schedule") {
  const auto report = dobinski_report(PsiSequence::gauss_q(Rational(2)), 3, efoc::doubling_schedule());
  CHECK(report.levels == std::vector<int>{8, 16, 32, 64});
  REQUIRE(report.partial_sums.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(report.residuals[i] == (report.partial_sums[i] - report.target).abs());
  }
}
