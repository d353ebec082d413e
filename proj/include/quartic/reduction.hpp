#pragma once

#include <optional>

#include "quartic/forms.hpp"

namespace quartic {

/// A x^2 + B x y + C y^2.
struct DefiniteQuadratic {
  Real A, B, C;
  long precision_bits;
};

/// The covariant m up to the positive factor sqrt(-A0): m = q / sqrt(-A0), with
/// q = (-A0/3, -A1/6, -A2/6 + A1^2/(24 A0)) rational and 9 q^2 = A0 H exactly.
struct ExactCovariant {
  Rat a, b, c;
  Int A0;
};

struct ReductionResult {
  QuarticForm reduced_form;
  UnimodularMap map;
};

struct HermiteResult {
  Int u1, u2;
  Rat attained;
  /// |attained| equals sqrt(4|D|/3) exactly.
  bool on_boundary = false;
};

/// Throws UnsupportedBranch for J != 0 and Inconsistency when -H/9 is not the square
/// of a positive definite quadratic (I <= 0 or F not split over R).
ExactCovariant exact_covariant(const QuarticForm& f);
DefiniteQuadratic covariant_m(const QuarticForm& f, long precision = Real::kDefaultBits);

/// |B| <= A <= C for the covariant m, decided exactly on the rational multiple q.
bool is_reduced(const QuarticForm& f);
ReductionResult reduce(const QuarticForm& f);

/// Equivalent form whose Hessian has A3 A4 != 0. search_bound caps the height of (l, q) and |t|.
ReductionResult normalize_A3A4(const QuarticForm& f, long search_bound = 1000);
/// normalize_A3A4 followed by a change of basis through a Hermite small value of W, so that
/// additionally 0 < |A4| <= 4 I.
ReductionResult normalize_small_A4(const QuarticForm& f, long search_bound = 1000);

/// Nonzero value of f11 u1^2 + 2 f12 u1 u2 + f22 u2^2 at an integer pair with |value| <= sqrt(4|D|/3).
/// For definite forms the value is the minimum over all nonzero pairs.
HermiteResult hermite_small_value(const Rat& f11, const Rat& f12, const Rat& f22);

/// A map M with apply_unimodular(F, M) = G, searching entries up to sweep_bound between reduced forms.
std::optional<UnimodularMap> equivalent(const QuarticForm& f, const QuarticForm& g, long sweep_bound = 10);

struct SignedEquivalence {
  UnimodularMap map;
  int sign;  // apply_unimodular(F, map) = sign * G
};
/// Equivalence allowing G to be replaced by -G.
std::optional<SignedEquivalence> equivalent_up_to_sign(const QuarticForm& f, const QuarticForm& g,
                                                       long sweep_bound = 10);

struct HessianBoundCheck {
  bool holds = true;
  /// The pair minimizing |H(x, y)| / y^4 among those below constant * I.
  std::optional<std::pair<Int, Int>> counterexample;
  Int H_value;
};
/// |H(x, y)| >= constant * I * y^4 for every integer pair with |x|, |y| <= box and y != 0.
HessianBoundCheck hessian_bound_check(const QuarticForm& f, const Rat& constant, long box = 50);

}  // namespace quartic
