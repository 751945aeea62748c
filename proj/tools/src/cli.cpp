#include "efoc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "efoc/appell.hpp"
#include "efoc/dobinski.hpp"
#include "efoc/errors.hpp"
#include "efoc/operators.hpp"
#include "efoc/stirling.hpp"

namespace efoc::cli {

namespace {

using nlohmann::json;

enum class Format { Csv, Json };

struct Options {
  std::string seq = "classical";
  std::string out_format = "csv";
  std::string output_path;
  int n = 0;
  int n_min = 0;
  int k_min = 0;
  int k_max = -1;
  int degree = 0;
  std::string kind = "second";
  std::string variant = "comtet";
  bool all = false;
  bool gauss_prefactor = false;
  std::vector<int> levels = doubling_schedule();
  std::string q_op = "delta";
  std::string phi;
};

json exact_json(const Rational& r) {
  return json{{"exact", r.to_string()}, {"decimal", r.to_decimal(30)}};
}

json polynomial_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(exact_json(c));
  return json{{"text", p.to_string()}, {"coefficients", coeffs}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("EFOC_ENUM_CAP")) {
    try {
      size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("EFOC_ENUM_CAP is not a nonnegative integer: '") + env + "'");
  }
  return kDefaultEnumerationCap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Series file: "c0 c1 ..." possibly over several lines, '#' comments.
OperatorSeries read_series_file(const PsiSequence& seq, const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::string text;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    text += line + " ";
  }
  return OperatorSeries::parse(seq, text);
}

OperatorSeries make_q_operator(const PsiSequence& seq, const std::string& spec, int order) {
  if (spec == "delta") return delta_from_translation(seq, order);
  if (spec == "derivative") return OperatorSeries::derivative(seq, order);
  if (spec.rfind("file:", 0) == 0) return read_series_file(seq, spec.substr(5));
  throw ParseError("unknown --q-op '" + spec + "' (expected delta, derivative or file:<path>)");
}

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  throw ParseError("unknown output format '" + f + "'");
}

std::string cmd_seq(const Options& o, Format fmt) {
  const auto seq = parse_selector(o.seq);
  if (fmt == Format::Json) {
    json rows = json::array();
    for (int n = 0; n <= o.n; ++n) {
      rows.push_back({{"n", n},
                      {"n_psi", exact_json(seq.number(n))},
                      {"n_psi_factorial", exact_json(seq.factorial(n))}});
    }
    return dump({{"sequence", seq.descriptor()}, {"rows", rows}});
  }
  std::string out = "n,n_psi,n_psi_factorial\n";
  for (int n = 0; n <= o.n; ++n) {
    out += std::to_string(n) + "," + seq.number(n).to_string() + "," +
           seq.factorial(n).to_string() + "\n";
  }
  return out;
}

std::string cmd_stirling(const Options& o, Format fmt) {
  const auto seq = parse_selector(o.seq);
  std::function<Rational(int, int)> value;
  std::unique_ptr<StirlingTable> table;
  if (o.kind == "explicit") {
    const std::uint64_t cap = enumeration_cap();
    value = [seq, cap](int n, int k) { return stirling2_explicit(seq, n, k, cap); };
  } else {
    StirlingVariant variant;
    if (o.kind == "second") variant = StirlingVariant::SecondTilde;
    else if (o.kind == "first") variant = StirlingVariant::FirstTilde;
    else if (o.kind == "whitney") variant = StirlingVariant::WhitneyC;
    else if (o.kind == "carlitz") variant = StirlingVariant::GaussSecond;
    else throw ParseError("unknown --kind '" + o.kind + "'");
    table = std::make_unique<StirlingTable>(seq, variant);
    value = [t = table.get()](int n, int k) { return t->at(n, k); };
  }

  json rows = json::array();
  std::string csv = "n,k,value\n";
  for (int n = std::max(0, o.n_min); n <= o.n; ++n) {
    const int k_hi = o.k_max < 0 ? n : std::min(n, o.k_max);
    json entries = json::array();
    for (int k = std::max(0, o.k_min); k <= k_hi; ++k) {
      const Rational v = value(n, k);
      if (fmt == Format::Json) {
        json e = exact_json(v);
        e["k"] = k;
        entries.push_back(e);
      } else {
        csv += std::to_string(n) + "," + std::to_string(k) + "," + v.to_string() + "\n";
      }
    }
    if (fmt == Format::Json) rows.push_back({{"n", n}, {"values", entries}});
  }
  if (fmt == Format::Json) {
    return dump({{"sequence", seq.descriptor()}, {"kind", o.kind}, {"rows", rows}});
  }
  return csv;
}

std::string cmd_bell(const Options& o, Format fmt) {
  const auto seq = parse_selector(o.seq);
  std::function<Rational(int)> value;
  if (o.variant == "comtet") {
    value = [seq](int n) { return bell(seq, n); };
  } else if (o.variant == "carlitz") {
    const Rational q = seq.q();
    value = [q](int n) { return bell_gauss(q, n); };
  } else {
    throw ParseError("unknown --variant '" + o.variant + "'");
  }

  const int lo = o.all ? 0 : o.n;
  if (fmt == Format::Json) {
    json rows = json::array();
    for (int n = lo; n <= o.n; ++n) {
      json e = exact_json(value(n));
      e["n"] = n;
      rows.push_back(e);
    }
    return dump({{"sequence", seq.descriptor()}, {"variant", o.variant}, {"rows", rows}});
  }
  if (!o.all) return value(o.n).to_string() + "\n";
  std::string out = "n,value\n";
  for (int n = 0; n <= o.n; ++n) out += std::to_string(n) + "," + value(n).to_string() + "\n";
  return out;
}

std::string cmd_dobinski(const Options& o, Format fmt) {
  const auto seq = parse_selector(o.seq);
  const auto report = dobinski_report(seq, o.n, o.levels, o.gauss_prefactor);
  if (fmt == Format::Json) {
    json rows = json::array();
    for (size_t i = 0; i < report.levels.size(); ++i) {
      rows.push_back({{"truncation", report.levels[i]},
                      {"partial_sum", exact_json(report.partial_sums[i])},
                      {"residual", exact_json(report.residuals[i])}});
    }
    return dump({{"sequence", seq.descriptor()},
                 {"n", o.n},
                 {"gauss_prefactor", o.gauss_prefactor},
                 {"target", exact_json(report.target)},
                 {"rows", rows}});
  }
  std::string out = "truncation,partial_sum,residual\n";
  for (size_t i = 0; i < report.levels.size(); ++i) {
    out += std::to_string(report.levels[i]) + "," + report.partial_sums[i].to_decimal(30) + "," +
           report.residuals[i].to_decimal(30) + "\n";
  }
  return out;
}

std::string cmd_appell(const Options& o, Format fmt) {
  const auto seq = parse_selector(o.seq);
  if (o.degree < 0) throw ParseError("--degree must be nonnegative");
  const auto q = make_q_operator(seq, o.q_op, o.degree + 1);
  const auto family = build_family(seq, q, o.degree);
  if (!verify_family(family)) {
    throw InvariantError("Appell family over " + seq.descriptor() + " failed its invariants");
  }
  if (fmt == Format::Json) {
    json rows = json::array();
    for (int n = 0; n <= o.degree; ++n) {
      rows.push_back({{"n", n},
                      {"appell_number", exact_json(family.appell_numbers[static_cast<size_t>(n)])},
                      {"polynomial", polynomial_json(family.polynomials[static_cast<size_t>(n)])}});
    }
    return dump({{"sequence", seq.descriptor()},
                 {"q_operator", q.truncated(o.degree + 1).to_string()},
                 {"validation", "invariants"},
                 {"family", rows}});
  }
  std::string out = "n,appell_number,polynomial\n";
  for (int n = 0; n <= o.degree; ++n) {
    out += std::to_string(n) + "," + family.appell_numbers[static_cast<size_t>(n)].to_string() +
           "," + family.polynomials[static_cast<size_t>(n)].to_string() + "\n";
  }
  return out;
}

std::string polynomial_table(const PsiSequence& seq, int lo, int hi, Format fmt,
                             const std::function<Polynomial(int)>& make, const char* family) {
  if (fmt == Format::Json) {
    json rows = json::array();
    for (int n = lo; n <= hi; ++n) rows.push_back({{"n", n}, {"polynomial", polynomial_json(make(n))}});
    return dump({{"sequence", seq.descriptor()}, {"family", family}, {"rows", rows}});
  }
  std::string out = "n,polynomial\n";
  for (int n = lo; n <= hi; ++n) out += std::to_string(n) + "," + make(n).to_string() + "\n";
  return out;
}

std::string cmd_hermite(const Options& o, Format fmt) {
  const auto seq = parse_selector(o.seq);
  return polynomial_table(seq, 0, o.n, fmt, [&](int n) { return hermite_psi(seq, n); }, "hermite");
}

std::string cmd_laguerre(const Options& o, Format fmt) {
  const auto seq = parse_selector(o.seq);
  return polynomial_table(seq, 1, o.n, fmt, [&](int n) { return laguerre_psi(seq, n); }, "laguerre");
}

std::string cmd_solve(const Options& o, Format fmt) {
  const auto seq = parse_selector(o.seq);
  const Polynomial phi = Polynomial::parse(o.phi);
  const auto q = make_q_operator(seq, o.q_op, std::max(phi.degree(), 0) + 2);
  const Polynomial f = solve(seq, q, phi);
  if (apply_series(q, f) != phi) {
    throw InvariantError("solution does not reproduce the right-hand side");
  }
  if (fmt == Format::Json) {
    return dump({{"sequence", seq.descriptor()},
                 {"phi", polynomial_json(phi)},
                 {"solution", polynomial_json(f)}});
  }
  return f.to_string() + "\n";
}

}  // namespace

PsiSequence parse_selector(const std::string& selector) {
  if (selector == "classical") return PsiSequence::classical();
  if (selector == "fibonomial") return PsiSequence::fibonomial();
  if (selector.rfind("q:", 0) == 0) return PsiSequence::gauss_q(Rational::parse(selector.substr(2)));
  if (selector.rfind("custom:", 0) == 0) return PsiSequence::custom_from_file(selector.substr(7));
  throw ParseError("unknown sequence kind '" + selector +
                   "' (expected classical, q:<rational>, fibonomial or custom:<file>)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact extended finite operator calculus: psi-Stirling/Bell tables, "
               "Dobinski series, psi-Appell families"};
  app.name("efoc");
  app.require_subcommand(1);

  Options o;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seq", o.seq, "classical | q:<rational> | fibonomial | custom:<file>");
    sub->add_option("--out", o.out_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", o.output_path, "write to this file instead of stdout");
  };

  auto* seq_cmd = app.add_subcommand("seq", "n_psi and n_psi! for n = 0..N");
  add_common(seq_cmd);
  seq_cmd->add_option("--n", o.n, "last index")->required()->check(CLI::NonNegativeNumber);

  auto* stirling_cmd = app.add_subcommand("stirling", "psi-Stirling number tables");
  add_common(stirling_cmd);
  stirling_cmd->add_option("--kind", o.kind, "second | first | whitney | carlitz | explicit")
      ->check(CLI::IsMember({"second", "first", "whitney", "carlitz", "explicit"}));
  stirling_cmd->add_option("--n", o.n, "last row")->required()->check(CLI::NonNegativeNumber);
  stirling_cmd->add_option("--n-min", o.n_min, "first row")->check(CLI::NonNegativeNumber);
  stirling_cmd->add_option("--k-min", o.k_min, "first column")->check(CLI::NonNegativeNumber);
  stirling_cmd->add_option("--k-max", o.k_max, "last column (default: diagonal)");

  auto* bell_cmd = app.add_subcommand("bell", "psi-Bell numbers");
  add_common(bell_cmd);
  bell_cmd->add_option("--n", o.n, "index")->required()->check(CLI::NonNegativeNumber);
  bell_cmd->add_option("--variant", o.variant, "comtet | carlitz")
      ->check(CLI::IsMember({"comtet", "carlitz"}));
  bell_cmd->add_flag("--all", o.all, "emit B_0..B_n as a table");

  auto* dobinski_cmd = app.add_subcommand("dobinski", "Dobinski-series convergence report");
  add_common(dobinski_cmd);
  dobinski_cmd->add_option("--n", o.n, "Bell index")->required()->check(CLI::NonNegativeNumber);
  dobinski_cmd->add_option("--levels", o.levels, "square truncation levels R = K")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  dobinski_cmd->add_flag("--gauss-prefactor", o.gauss_prefactor,
                         "use the q^-binom(r,2) weights (q sequences only)");

  auto* appell_cmd = app.add_subcommand("appell", "psi-Appell family of a delta operator");
  add_common(appell_cmd);
  appell_cmd->add_option("--q-op", o.q_op, "delta | derivative | file:<series>");
  appell_cmd->add_option("--degree", o.degree, "largest n")->required()->check(CLI::NonNegativeNumber);

  auto* hermite_cmd = app.add_subcommand("hermite", "psi-Hermite polynomials H_0..H_N");
  add_common(hermite_cmd);
  hermite_cmd->add_option("--n", o.n, "last index")->required()->check(CLI::NonNegativeNumber);

  auto* laguerre_cmd = app.add_subcommand("laguerre", "psi-Laguerre polynomials L_1..L_N");
  add_common(laguerre_cmd);
  laguerre_cmd->add_option("--n", o.n, "last index")->required()->check(CLI::PositiveNumber);

  auto* solve_cmd = app.add_subcommand("solve", "canonical polynomial solution of Q f = phi");
  add_common(solve_cmd);
  solve_cmd->add_option("--q-op", o.q_op, "delta | derivative | file:<series>");
  solve_cmd->add_option("--phi", o.phi, "right-hand side \"c0 c1 ...\"")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format fmt = parse_format(o.out_format);
    std::string data;
    if (*seq_cmd) data = cmd_seq(o, fmt);
    else if (*stirling_cmd) data = cmd_stirling(o, fmt);
    else if (*bell_cmd) data = cmd_bell(o, fmt);
    else if (*dobinski_cmd) data = cmd_dobinski(o, fmt);
    else if (*appell_cmd) data = cmd_appell(o, fmt);
    else if (*hermite_cmd) data = cmd_hermite(o, fmt);
    else if (*laguerre_cmd) data = cmd_laguerre(o, fmt);
    else if (*solve_cmd) data = cmd_solve(o, fmt);

    if (o.output_path.empty()) {
      out << data;
    } else {
      std::ofstream file(o.output_path, std::ios::binary);
      if (!file) throw IoError("cannot write '" + o.output_path + "'");
      file << data;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << e.name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << e.name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace efoc::cli
