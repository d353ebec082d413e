#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quartic/forms.hpp"

namespace quartic {

/// One pair per +-(x, y), stored with y > 0 or y = 0 and x > 0.
struct SolutionRecord {
  Int x, y;
  Int value;
  bool primitive = false;
  std::optional<int> omega_index;
  std::optional<bool> y_threshold_met;

  friend bool operator==(const SolutionRecord& a, const SolutionRecord& b) { return a.x == b.x && a.y == b.y; }
};

/// Canonical order: by y, then x.
bool canonical_less(const SolutionRecord& a, const SolutionRecord& b);

/// All (x, y) with F(x, y) = +-h and max(|x|, |y|) <= height_bound. Complete inside the box only.
std::vector<SolutionRecord> solve_equation(const QuarticForm& f, const Int& h, long height_bound);
/// Coprime (x, y) with 0 < |F(x, y)| <= h inside the box, each carrying the y threshold flag.
std::vector<SolutionRecord> solve_inequality(const QuarticForm& f, const Int& h, long height_bound);

/// |y| >= h^(3/4) / (3I)^(1/8), decided exactly as 3 I y^8 >= h^6.
bool y_threshold(const Int& y, const Int& h, const Int& I);

/// Fills omega_index through the resolvent basis of f.
void populate_omegas(const QuarticForm& f, std::vector<SolutionRecord>& records, long precision = 128);

struct Census {
  std::array<long, 4> counts{};
  long total = 0;
  /// Every per-omega count is at most 3 and the total at most 12.
  bool within_bounds = true;
};
/// Throws IncompleteInput if a record has no omega index.
Census census(const std::vector<SolutionRecord>& solutions);

}  // namespace quartic
