#pragma once

#include <optional>
#include <vector>

#include "quartic/forms.hpp"

namespace quartic {

struct FormClass {
  QuarticForm representative;
  Int invariant_I;
  std::optional<long> solution_count;
  /// Every distinct reduced form met in the scan for this class.
  std::vector<QuarticForm> reduced_forms;
};

struct EnumerationStats {
  long long scanned = 0;
  long long j_zero = 0;
  long long accepted = 0;
  std::size_t distinct_reduced = 0;
};

/// Classes of irreducible J = 0 forms with 0 < I <= I_max and four real roots, among forms with
/// every |a_i| <= coeff_bound. F and -F fall in one class. Sorted by I, then coefficients.
std::vector<FormClass> enumerate_forms(long I_max, long coeff_bound, EnumerationStats* stats = nullptr);

/// Preferred representative order: a0 > 0 first, then smaller |a0|, then lexicographic.
bool representative_before(const QuarticForm& f, const QuarticForm& g);

}  // namespace quartic
