#include "efoc/sequences.hpp"

#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "efoc/errors.hpp"

namespace efoc {

struct PsiSequence::Impl {
  Kind kind;
  Rational q;
  std::vector<Rational> custom;
  std::string descriptor;

  // numbers[n] = n_psi, factorials[n] = n_psi!; both grow together.
  mutable std::shared_mutex mutex;
  mutable std::vector<Rational> numbers{Rational(0)};
  mutable std::vector<Rational> factorials{Rational(1)};
  mutable mpz_class fib_prev{1};  // F_{n-1} for the last filled n (F_0 = 0, F_{-1} = 1)

  Rational next_number(int n) const {
    switch (kind) {
      case Kind::Classical:
        return Rational(n);
      case Kind::GaussQ:
        // n_q = 1 + q (n-1)_q, no division so q = 0 is fine.
        return Rational(1) + q * numbers[static_cast<size_t>(n - 1)];
      case Kind::Fibonomial: {
        mpz_class current = numbers[static_cast<size_t>(n - 1)].numerator() + fib_prev;
        fib_prev = numbers[static_cast<size_t>(n - 1)].numerator();
        return Rational(mpq_class(current));
      }
      case Kind::Custom:
        if (static_cast<size_t>(n) > custom.size()) {
          throw DomainError("custom sequence defines only " + std::to_string(custom.size()) +
                            " values; index " + std::to_string(n) + " requested");
        }
        return custom[static_cast<size_t>(n - 1)];
    }
    return Rational(0);
  }

  void fill_to(int n) const {
    {
      std::shared_lock lock(mutex);
      if (static_cast<int>(numbers.size()) > n) return;
    }
    std::unique_lock lock(mutex);
    while (static_cast<int>(numbers.size()) <= n) {
      const int idx = static_cast<int>(numbers.size());
      Rational value = next_number(idx);
      if (value.is_zero()) {
        std::string why = kind == Kind::GaussQ ? " (q^" + std::to_string(idx) + " = 1)" : "";
        throw AdmissibilityError(idx, "sequence " + descriptor + " is not admissible at n = " +
                                          std::to_string(idx) + ": n_psi = 0" + why);
      }
      factorials.push_back(factorials.back() * value);
      numbers.push_back(std::move(value));
    }
  }
};

PsiSequence::PsiSequence(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

PsiSequence PsiSequence::classical() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Classical;
  impl->descriptor = "classical";
  return PsiSequence(std::move(impl));
}

PsiSequence PsiSequence::gauss_q(const Rational& q) {
  if (q == Rational(1)) {
    throw DomainError("GaussQ requires q != 1; request the classical sequence instead");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::GaussQ;
  impl->q = q;
  impl->descriptor = "q:" + q.to_string();
  return PsiSequence(std::move(impl));
}

PsiSequence PsiSequence::fibonomial() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Fibonomial;
  impl->descriptor = "fibonomial";
  impl->fib_prev = 1;
  return PsiSequence(std::move(impl));
}

PsiSequence PsiSequence::custom(std::vector<Rational> values) {
  std::string desc = "custom[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) {
      throw AdmissibilityError(static_cast<int>(i + 1),
                               "custom sequence value at n = " + std::to_string(i + 1) + " is 0");
    }
    if (i) desc += ",";
    desc += values[i].to_string();
  }
  desc += "]";
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Custom;
  impl->custom = std::move(values);
  impl->descriptor = std::move(desc);
  return PsiSequence(std::move(impl));
}

PsiSequence PsiSequence::custom_from_text(std::string_view text) {
  std::vector<Rational> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      values.push_back(Rational::parse(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return custom(std::move(values));
}

PsiSequence PsiSequence::custom_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read custom sequence file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return custom_from_text(buf.str());
}

PsiSequence::Kind PsiSequence::kind() const { return impl_->kind; }

const Rational& PsiSequence::q() const {
  if (impl_->kind != Kind::GaussQ) throw DomainError("sequence " + impl_->descriptor + " has no q");
  return impl_->q;
}

const std::string& PsiSequence::descriptor() const { return impl_->descriptor; }

Rational PsiSequence::number(int n) const {
  if (n < 0) throw DomainError("negative sequence index " + std::to_string(n));
  impl_->fill_to(n);
  std::shared_lock lock(impl_->mutex);
  return impl_->numbers[static_cast<size_t>(n)];
}

Rational PsiSequence::factorial(int n) const {
  if (n < 0) throw DomainError("negative factorial index " + std::to_string(n));
  impl_->fill_to(n);
  std::shared_lock lock(impl_->mutex);
  return impl_->factorials[static_cast<size_t>(n)];
}

Rational PsiSequence::binomial(int n, int k) const {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational PsiSequence::falling(int n, int k) const {
  if (n < 0 || k < 0) {
    throw DomainError("psi falling factorial needs n, k >= 0 (got " + std::to_string(n) + ", " +
                      std::to_string(k) + ")");
  }
  if (k > n) return Rational(0);  // the product passes through 0_psi
  Rational out(1);
  for (int j = n; j > n - k; --j) out *= number(j);
  return out;
}

bool operator==(const PsiSequence& a, const PsiSequence& b) {
  return a.impl_ == b.impl_ || a.impl_->descriptor == b.impl_->descriptor;
}

}  // namespace efoc
