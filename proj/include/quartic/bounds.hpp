#pragma once

#include "quartic/real.hpp"
#include "quartic/resolvent.hpp"

namespace quartic {

struct GapContext {
  Int I;
  Int h;
  Int A0, A4;
  long precision_bits = Real::kDefaultBits;
};

/// Context matching the normalization used by the resolvent basis.
GapContext gap_context(const ResolventBasis& basis, const Int& h);

enum class ThresholdVariant { Equation, Inequality };

/// Lower bound |xi|^3 / (pi sqrt3 h |A4|^(1/4)) for the next resolvent modulus.
Real growth_step(const Real& xi_abs, const GapContext& ctx);
/// 0.39 I^(9/8) |A4|^(1/8) / h^(7/4) (needs I > 36.6 h^2) or 4 h^(11/4) I^(9/8) |A4|^(1/8).
Real xi1_threshold(const GapContext& ctx, ThresholdVariant variant);
/// The unrounded constants behind the two thresholds: 72 sqrt3 (4 sqrt3)^(9/4) / (2 pi (5 pi)^3)
/// and (4 sqrt3)^(9/4) (3 / (2 pi))^4.
Real equation_threshold_constant(long bits);
Real inequality_threshold_constant(long bits);

/// 2^(-g/4) (-A0 I / 3)^(1/2 - 3g/8).
Real lambda_lower(const Int& A0, const Int& I, int g, long bits = Real::kDefaultBits);

Real c1(int r, int g, const GapContext& ctx);
Real c2(int r, int g, const GapContext& ctx);

/// 4^k / (2 sqrt k) <= C(2k, k) < 4^k / sqrt(pi k).
bool stirling_check(long k);

struct ProductCheck {
  Real partial_product;  // prod_{k=1}^{terms} (k^2 + k + 3/16) / (k^2 + k)
  Real limit;            // 16 / (3 sqrt2 pi)
  /// X_r < 1 / (sqrt2 pi r) for every r <= terms.
  bool x_bound_holds;
  /// X_r from the binomials equals y_r / r from the product recurrence, exactly.
  bool recurrence_matches;
  /// C(r-g+1/4, r+1-g) C(r-1/4, r) <= X_r for g in {0, 1}.
  bool binomial_dominated;
  long first_failure = 0;
};
ProductCheck product_constant_check(long terms, long bits = Real::kDefaultBits);

/// Lower bound for |xi_2| given |xi_1| above the applicable threshold.
Real fin2_bound(int r, const Real& xi1_abs, const GapContext& ctx,
                ThresholdVariant variant = ThresholdVariant::Inequality);

/// Upper bound on |z_{i+1}| obtained by chaining growth_step through |z| = 8 h sqrt(3 I |A4|) / |xi|^4.
Real chained_z_bound(const Real& z_abs, const GapContext& ctx);
/// The closed form 3 pi^4 |z|^3 h^2 / (64 I).
Real chained_z_closed_form(const Real& z_abs, const GapContext& ctx);
/// Smallest I / h^2 for which |z| <= 2 forces the next |z| below 1: 3 pi^4 / 8.
Real chained_threshold_ratio(long bits);

}  // namespace quartic
