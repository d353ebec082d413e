#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quartic/forms.hpp"

namespace quartic {

enum class Command { Invariants, Hessian, Reduce, Enumerate, Solve, Resolvent, Verify, ReportTable };
enum class OutputFormat { Human, Structured };

struct RunConfig {
  Command command = Command::Invariants;
  std::optional<QuarticForm> form;
  Int h = 1;
  long height_bound = 10000;
  long I_max = 135;
  long coeff_bound = 20;
  long precision_bits = 128;
  OutputFormat output_format = OutputFormat::Human;
  std::string suite = "all";
  /// solve: |F| <= h over coprime pairs instead of |F| = h.
  bool inequality = false;
};

/// Thrown by parse_config for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// args excludes the program name. Throws UsageError or HelpRequested.
RunConfig parse_config(const std::vector<std::string>& args);

/// 0 success, 1 failed verification or table mismatch, 2 input outside a command's domain.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run with the exit contract applied to parse errors.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace quartic
