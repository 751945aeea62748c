#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "efoc/sequences.hpp"

namespace efoc::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the efoc command line. `args` excludes the program name. Data goes
/// to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "classical", "q:<rational>", "fibonomial" or "custom:<file>".
PsiSequence parse_selector(const std::string& selector);

}  // namespace efoc::cli
