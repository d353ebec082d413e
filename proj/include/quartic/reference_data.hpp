#pragma once

#include <optional>
#include <vector>

#include "quartic/forms.hpp"
#include "quartic/poly.hpp"

namespace quartic {

struct ExpectedSolution {
  long x, y;
  std::optional<long> value;  // sign of F where the source states it
  std::optional<int> omega;  // index k of i^k, where the source states it
};

struct ExpectedRow {
  QuarticForm form;
  long I;
  std::vector<ExpectedSolution> solutions;
};

/// The published class table for J = 0, I <= 135, forms splitting over R, with solutions of |F| = 1.
const std::vector<ExpectedRow>& expected_table();

struct PadeLiterals {
  int r;
  Rat factor;  // A_r = factor * A_{r,0}
  RationalPoly A, B, F;
};
/// Published A_r, B_r, F_r for r = 1..5.
const std::vector<PadeLiterals>& pade_literals();

}  // namespace quartic
