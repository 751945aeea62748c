// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efoc/appell.hpp"
#include "efoc/cli.hpp"
#include "efoc/dobinski.hpp"
#include "efoc/operators.hpp"
#include "efoc/polynomial.hpp"
#include "efoc/stirling.hpp"
#include "support/oracles.hpp"

namespace {

using namespace efoc;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = "first failure: " + what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> check;
};

fs::path g_report_dir;

std::string seconds_since(std::chrono::steady_clock::time_point start) {
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

std::vector<PsiSequence> five_sequences() { return oracle::builtin_sequences(); }

std::vector<PsiSequence> every_kind(std::mt19937_64& rng) {
  auto seqs = five_sequences();
  seqs.push_back(oracle::random_custom_sequence(rng, 24));
  return seqs;
}

Outcome basis_identity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& seq : five_sequences()) {
    const StirlingTable table(seq, StirlingVariant::SecondTilde);
    for (int n = 0; n <= 12; ++n) {
      Polynomial sum;
      for (int k = 0; k <= n; ++k) sum += basis_element(seq, BasisKind::PsiFalling, k) * table.at(n, k);
      o.require(sum == Polynomial::monomial(n), seq.descriptor() + " n=" + std::to_string(n));
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(elapsed < 5.0, "took longer than 5 s");
  if (o.pass) o.detail = "exact for n <= 12, five sequences, " + seconds_since(start);
  return o;
}

Outcome triple_agreement() {
  Outcome o;
  for (const auto& seq : five_sequences()) {
    const StirlingTable table(seq, StirlingVariant::SecondTilde);
    for (int n = 0; n <= 10; ++n) {
      const auto via_basis = to_basis(Polynomial::monomial(n), seq, BasisKind::PsiFalling);
      for (int k = 0; k <= n; ++k) {
        const Rational rec = table.at(n, k);
        o.require(rec == stirling2_explicit(seq, n, k) && rec == via_basis[static_cast<size_t>(k)],
                  seq.descriptor() + " {" + std::to_string(n) + "," + std::to_string(k) + "}");
      }
    }
  }
  if (o.pass) o.detail = "recurrence = enumeration = basis conversion, n <= 10";
  return o;
}

Outcome ogf_check() {
  Outcome o;
  for (const auto& seq : five_sequences()) {
    const StirlingTable table(seq, StirlingVariant::SecondTilde);
    for (int k = 0; k <= 8; ++k) {
      const auto col = ogf_column(seq, k, 16);
      for (int n = 0; n <= 16; ++n) {
        o.require(col[static_cast<size_t>(n)] == table.at(n, k),
                  seq.descriptor() + " k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail = "column series exact for k <= 8, n <= 16";
  return o;
}

Outcome orthogonality() {
  Outcome o;
  for (const auto& seq : five_sequences()) {
    const StirlingTable first(seq, StirlingVariant::FirstTilde);
    const StirlingTable second(seq, StirlingVariant::SecondTilde);
    for (int k = 0; k <= 10; ++k) {
      for (int l = 0; l <= 10; ++l) {
        Rational acc(0);
        for (int r = 0; r <= 10; ++r) acc += first.at(k, r) * second.at(r, l);
        o.require(acc == Rational(k == l ? 1 : 0), seq.descriptor());
      }
    }
    o.require(orthogonality_check(seq, 10), seq.descriptor() + " orthogonality_check");
  }
  if (o.pass) o.detail = "first x second = identity, indices <= 10";
  return o;
}

Outcome classical_bell() {
  Outcome o;
  const std::vector<long> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147};
  const auto classical = PsiSequence::classical();
  for (int n = 0; n <= 9; ++n) {
    const Rational brute(oracle::set_partition_count(n));
    o.require(brute == Rational(expected[static_cast<size_t>(n)]), "oracle n=" + std::to_string(n));
    o.require(bell(classical, n) == brute, "bell n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "B_0..B_9 = set-partition counts";
  return o;
}

Outcome classical_dobinski() {
  Outcome o;
  const auto classical = PsiSequence::classical();
  const Rational tol(1, 1000000000);
  Rational worst(0);
  for (int n = 0; n <= 10; ++n) {
    const Rational target = bell(classical, n);
    const Rational r60 = (dobinski_partial(classical, n, TruncationSpec::square(60)) - target).abs();
    const Rational r16 = (dobinski_partial(classical, n, TruncationSpec::square(16)) - target).abs();
    const Rational r32 = (dobinski_partial(classical, n, TruncationSpec::square(32)) - target).abs();
    o.require(r60 < tol, "n=" + std::to_string(n) + " residual at 60 = " + r60.to_decimal(6));
    o.require(r32 * Rational(10) <= r16, "n=" + std::to_string(n) + " no 10x shrink 16 -> 32");
    if (r60 > worst) worst = r60;
  }
  if (o.pass) o.detail = "max residual at R=K=60: " + worst.to_decimal(3);
  return o;
}

Outcome q_dobinski_experiment() {
  Outcome o;
  const auto produce = [] {
    std::string csv = "q,weights,n,truncation,partial_sum,residual,target\n";
    std::vector<std::string> summary;
    for (const Rational q : {Rational(1, 2), Rational(2)}) {
      const auto seq = PsiSequence::gauss_q(q);
      for (const bool prefactor : {true, false}) {
        for (int n = 0; n <= 6; ++n) {
          const auto report = dobinski_report(seq, n, doubling_schedule(), prefactor);
          for (size_t i = 0; i < report.levels.size(); ++i) {
            csv += q.to_string() + "," + (prefactor ? "eps_q" : "eps_psi") + "," + std::to_string(n) +
                   "," + std::to_string(report.levels[i]) + "," + report.partial_sums[i].to_string() +
                   "," + report.residuals[i].to_decimal(30) + "," + report.target.to_string() + "\n";
          }
          if (n == 6) {
            summary.push_back("q=" + q.to_string() + (prefactor ? " eps_q" : " eps_psi") +
                              " n=6 residual@64=" + report.residuals.back().to_decimal(3));
          }
        }
      }
    }
    return std::make_pair(csv, summary);
  };

  const auto first = produce();
  const auto second = produce();
  o.require(first.first == second.first, "report is not reproducible");
  o.require(first.first.size() > 100, "empty report");
  if (!g_report_dir.empty()) {
    fs::create_directories(g_report_dir);
    std::ofstream(g_report_dir / "q_dobinski.csv") << first.first;
  }
  if (o.pass) {
    o.detail = "report reproducible (" + std::to_string(2 * 2 * 7 * 4) + " rows";
    if (!g_report_dir.empty()) o.detail += ", " + (g_report_dir / "q_dobinski.csv").string();
    o.detail += ")";
    for (const auto& s : first.second) o.detail += "\n         " + s;
  }
  return o;
}

Outcome carlitz_consistency() {
  Outcome o;
  for (const Rational q : {Rational(2), Rational(1, 2), Rational(3, 5)}) {
    const auto seq = PsiSequence::gauss_q(q);
    const StirlingTable carlitz(seq, StirlingVariant::GaussSecond);
    for (int n = 0; n <= 8; ++n) {
      for (int x = 0; x <= n; ++x) {
        Rational rhs(0);
        for (int k = 0; k <= n; ++k) rhs += carlitz.at(n, k) * psi_falling(seq, x, k);
        o.require(rhs == psi_number(seq, x).pow(n),
                  "q=" + q.to_string() + " n=" + std::to_string(n) + " x=" + std::to_string(x));
      }
      for (int k = 0; k <= n; ++k) o.require(carlitz.at(n, k) == stirling2_gauss_nodal(q, n, k), "nodal route");
    }
  }
  if (o.pass) o.detail = "x_q^n expansion exact at x = 0..n, n <= 8";
  return o;
}

Outcome appell_invariants() {
  Outcome o;
  std::mt19937_64 rng(20041);
  int families = 0;
  for (const auto& seq : every_kind(rng)) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto q = oracle::random_delta(rng, seq, 11);
      const auto family = build_family(seq, q, 10);
      for (int n = 1; n <= 10; ++n) {
        const auto& an = family.polynomials[static_cast<size_t>(n)];
        const Rational n_psi = psi_number(seq, n);
        o.require(psi_derivative(seq, an) == family.polynomials[static_cast<size_t>(n - 1)] * n_psi,
                  seq.descriptor() + " d A_n");
        o.require(apply_series(q, an) == Polynomial::monomial(n - 1, n_psi), seq.descriptor() + " Q A_n");
      }
      ++families;
    }
  }
  if (o.pass) o.detail = std::to_string(families) + " families, N = 10";
  return o;
}

Outcome solver() {
  Outcome o;
  std::mt19937_64 rng(20042);
  const auto seqs = every_kind(rng);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& seq = seqs[static_cast<size_t>(trial) % seqs.size()];
    const auto phi = oracle::random_polynomial(rng, 8);
    const auto q = oracle::random_delta(rng, seq, 10);
    o.require(apply_series(q, solve(seq, q, phi)) == phi, "trial " + std::to_string(trial));
  }
  const auto classical = PsiSequence::classical();
  const auto delta = delta_from_translation(classical, 3);
  const auto f = solve(classical, delta, Polynomial::constant(Rational(1)));
  o.require(f == Polynomial{Rational(-1, 2), Rational(1)}, "worked case x - 1/2");
  o.require(apply_series(delta, f) == Polynomial::constant(Rational(1)), "Delta(x - 1/2) = 1");
  if (o.pass) o.detail = "200 random (Q, phi) exact; Delta(x - 1/2) = 1";
  return o;
}

Outcome classical_bernoulli() {
  Outcome o;
  const auto classical = PsiSequence::classical();
  const auto family = build_family(classical, delta_from_translation(classical, 5), 4);
  const auto oracle_values = oracle::bernoulli_numbers(4);
  const std::vector<Rational> expected{Rational(1), Rational(-1, 2), Rational(1, 6), Rational(0),
                                       Rational(-1, 30)};
  for (int n = 0; n <= 4; ++n) {
    o.require(oracle_values[static_cast<size_t>(n)] == expected[static_cast<size_t>(n)], "oracle");
    o.require(family.appell_numbers[static_cast<size_t>(n)] == expected[static_cast<size_t>(n)],
              "A_" + std::to_string(n));
  }
  o.require(family.polynomials[2] == Polynomial{Rational(1, 6), Rational(-1), Rational(1)}, "A_2(x)");
  if (o.pass) o.detail = "A_0..A_4 = 1, -1/2, 1/6, 0, -1/30; A_2(x) = x^2 - x + 1/6";
  return o;
}

Outcome named_families() {
  Outcome o;
  const auto classical = PsiSequence::classical();
  o.require(hermite_psi(classical, 2) == Polynomial{Rational(-1), Rational(0), Rational(1)}, "H_2");
  o.require(hermite_psi(classical, 3) == Polynomial{Rational(0), Rational(-3), Rational(0), Rational(1)},
            "H_3");
  for (int n = 1; n <= 8; ++n) {
    Polynomial printed;
    for (int k = 1; k <= n; ++k) {
      Rational c = oracle::factorial(n) / oracle::factorial(k) * oracle::factorial(n - 1) /
                   (oracle::factorial(k - 1) * oracle::factorial(n - k));
      if (k % 2) c = -c;
      printed += Polynomial::monomial(k, c);
    }
    o.require(laguerre_psi(classical, n) == printed, "L_" + std::to_string(n));
  }
  if (o.pass) o.detail = "H_2, H_3 and L_1..L_8 match";
  return o;
}

Outcome f_bernoulli_cli() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"appell", "--seq", "fibonomial", "--q-op", "delta", "--degree", "7"}, out, err);
  o.require(code == 0, "cli exit " + std::to_string(code) + ": " + err.str());
  if (!o.pass) return o;
  if (!g_report_dir.empty()) {
    fs::create_directories(g_report_dir);
    std::ofstream(g_report_dir / "f_bernoulli.csv") << out.str();
  }

  const auto fib = PsiSequence::fibonomial();
  const auto delta = delta_from_translation(fib, 8);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  o.require(line == "n,appell_number,polynomial", "header");
  std::vector<Rational> numbers;
  std::vector<Polynomial> polys;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    numbers.push_back(Rational::parse(line.substr(c1 + 1, c2 - c1 - 1)));
    polys.push_back(Polynomial::parse(line.substr(c2 + 1)));
  }
  o.require(polys.size() == 8, "expected 8 rows");
  std::string listing;
  for (size_t n = 0; n < polys.size(); ++n) {
    o.require(polys[n](Rational(0)) == numbers[n], "A_n(0) = A_n");
    if (n >= 1) {
      const Rational n_psi = psi_number(fib, static_cast<int>(n));
      o.require(psi_derivative(fib, polys[n]) == polys[n - 1] * n_psi, "d_F A_" + std::to_string(n));
      o.require(apply_series(delta, polys[n]) == Polynomial::monomial(static_cast<int>(n) - 1, n_psi),
                "Delta_F A_" + std::to_string(n));
      o.require(translate(fib, Rational(1), polys[n]) - polys[n] ==
                    Polynomial::monomial(static_cast<int>(n) - 1, n_psi),
                "E^1 - id on A_" + std::to_string(n));
    }
    listing += (n ? ", " : "") + numbers[n].to_string();
  }
  if (o.pass) o.detail = "F-Bernoulli-Ward numbers: " + listing + " (validated by invariants only)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"efoc acceptance suite"};
  std::string report_dir;
  app.add_option("--report-dir", report_dir, "where to write the experiment reports");
  CLI11_PARSE(app, argc, argv);
  g_report_dir = report_dir;

  const std::vector<Criterion> criteria{
      {"AC-01", "basis identity x^n = sum {n k} psi_k(x)", basis_identity},
      {"AC-02", "triple agreement of second-kind numbers", triple_agreement},
      {"AC-03", "column OGF vs recurrence", ogf_check},
      {"AC-04", "first/second kind orthogonality", orthogonality},
      {"AC-05", "classical Bell numbers vs set partitions", classical_bell},
      {"AC-06", "classical Dobinski series", classical_dobinski},
      {"AC-07", "q-Dobinski convergence report", q_dobinski_experiment},
      {"AC-08", "Carlitz q-Stirling consistency", carlitz_consistency},
      {"AC-09", "Appell invariants for random delta operators", appell_invariants},
      {"AC-10", "nonhomogeneous equation solver", solver},
      {"AC-11", "classical Bernoulli-Ward numbers", classical_bernoulli},
      {"AC-12", "Hermite and Laguerre families", named_families},
      {"AC-13", "Fibonomial Bernoulli-Ward numbers from the CLI", f_bernoulli_cli},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title;
    if (!outcome.detail.empty()) std::cout << "\n         " << outcome.detail;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
