#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quartic/enumeration.hpp"
#include "quartic/reference_data.hpp"
#include "quartic/reduction.hpp"
#include "quartic/thue_solver.hpp"

namespace quartic {

struct TableRow {
  FormClass cls;
  /// The published form of the same class, when one was matched.
  std::optional<QuarticForm> published;
  std::optional<SignedEquivalence> witness;
  /// Solutions of |F| = 1 for the published form (or the representative if unmatched).
  std::vector<SolutionRecord> solutions;
  Census census;
  /// Solution count of |F| = 1 for the enumerated representative itself.
  long representative_count = 0;
  std::vector<std::string> problems;
};

struct TableReport {
  std::vector<TableRow> rows;
  /// Published rows with no enumerated class, and other table-level mismatches.
  std::vector<std::string> problems;
  bool matches() const;
};

struct TableOptions {
  long I_max = 135;
  long coeff_bound = 20;
  long height_bound = 100;
  long precision_bits = 128;
};

/// Enumerate, solve |F| = 1, associate omegas, tally, and diff against the embedded table.
TableReport build_table(const TableOptions& options);

/// Same set of pairs up to (x, y) ~ (-x, -y).
bool same_solution_set(const std::vector<SolutionRecord>& got, const std::vector<ExpectedSolution>& want);

}  // namespace quartic
