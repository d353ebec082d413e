#include "quartic/enumeration.hpp"

#include <algorithm>
#include <set>

#include "quartic/errors.hpp"
#include "quartic/reduction.hpp"

namespace quartic {

bool representative_before(const QuarticForm& f, const QuarticForm& g) {
  auto key = [](const QuarticForm& h) { return std::make_tuple(h.a[0] < 0, Int(abs(h.a[0]))); };
  auto kf = key(f), kg = key(g);
  if (kf != kg) return kf < kg;
  return f < g;
}

namespace {

// Cheap exact filters in machine integers; the bounds keep every product far below 2^63.
bool passes_filters(long a0, long a1, long a2, long a3, long a4, long I_max) {
  long I = a2 * a2 - 3 * a1 * a3 + 12 * a0 * a4;
  if (I <= 0 || I > I_max) return false;
  if (a0 == 0 || a4 == 0) return false;  // y or x divides F
  if (8 * a0 * a2 - 3 * a1 * a1 >= 0) return false;  // A0 < 0 is necessary for four real roots
  return true;
}

}  // namespace

std::vector<FormClass> enumerate_forms(long I_max, long coeff_bound, EnumerationStats* stats) {
  if (I_max < 1 || coeff_bound < 1) throw InvalidInput("enumeration bounds must be positive");
  if (coeff_bound > 2000) throw InvalidInput("coefficient bound too large for the machine-integer scan");
  const long B = coeff_bound;
  EnumerationStats local;
  std::set<QuarticForm> reduced;

  auto consider = [&](long a0, long a1, long a2, long a3, long a4) {
    ++local.j_zero;
    if (!passes_filters(a0, a1, a2, a3, a4, I_max)) return;
    QuarticForm f(a0, a1, a2, a3, a4);
    if (invariant_J(f) != 0) throw Inconsistency("J solve produced nonzero J");
    if (!is_irreducible(f) || real_root_count(f) != 4) return;
    ++local.accepted;
    reduced.insert(reduce(f).reduced_form);
  };

  for (long a0 = -B; a0 <= B; ++a0)
    for (long a1 = -B; a1 <= B; ++a1)
      for (long a2 = -B; a2 <= B; ++a2)
        for (long a3 = -B; a3 <= B; ++a3) {
          local.scanned += 1;
          // J is linear in a4: J = N + a4 * den.
          long N = 2 * a2 * a2 * a2 - 9 * a1 * a2 * a3 + 27 * a0 * a3 * a3;
          long den = 27 * a1 * a1 - 72 * a0 * a2;
          if (den == 0) {
            if (N != 0) continue;
            for (long a4 = -B; a4 <= B; ++a4) consider(a0, a1, a2, a3, a4);
          } else {
            if (N % den != 0) continue;
            long a4 = -N / den;
            if (a4 < -B || a4 > B) continue;
            consider(a0, a1, a2, a3, a4);
          }
        }
  local.distinct_reduced = reduced.size();

  // Group reduced forms into classes, identifying F with -F.
  std::vector<std::vector<QuarticForm>> groups;
  for (const QuarticForm& f : reduced) {
    bool placed = false;
    for (auto& grp : groups) {
      if (invariant_I(grp.front()) != invariant_I(f)) continue;
      if (equivalent_up_to_sign(grp.front(), f)) {
        grp.push_back(f);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({f});
  }

  std::vector<FormClass> classes;
  for (auto& grp : groups) {
    std::vector<QuarticForm> pool = grp;
    for (const auto& f : grp) pool.push_back(f.negated());
    QuarticForm best = *std::min_element(pool.begin(), pool.end(), representative_before);
    classes.push_back({best, invariant_I(best), std::nullopt, grp});
  }
  std::sort(classes.begin(), classes.end(), [](const FormClass& x, const FormClass& y) {
    if (x.invariant_I != y.invariant_I) return x.invariant_I < y.invariant_I;
    return x.representative < y.representative;
  });
  if (stats) *stats = local;
  return classes;
}

}  // namespace quartic
