#pragma once

#include <optional>

#include "quartic/forms.hpp"
#include "quartic/reduction.hpp"

namespace quartic {

/// xi(x, y) = scale * (x - rho y) and eta = conj(xi), with F = (xi^4 - eta^4) / K and
/// K = -8 i sqrt(3 I |A4|), the value of 96 A3^2 A4 sqrt(-3I) / (12 A3^2 sqrt|A4|) for A4 < 0.
struct ResolventBasis {
  QuarticForm form;
  /// Equivalent form with A3 A4 != 0 and the map carrying form to it.
  ReductionResult normalized;
  HessianCoefficients normalized_hessian;
  Int I;
  Int A4;
  Complex K;
  /// Root of the covariant m(x, 1) with negative imaginary part.
  Complex rho;
  Complex scale;
  long precision_bits;

  Complex xi(const Int& x, const Int& y) const;
  Complex eta(const Int& x, const Int& y) const { return xi(x, y).conj(); }
  /// (xi^4 - eta^4) / K, which reproduces F(x, y).
  Complex diagonal_value(const Int& x, const Int& y) const;
  /// W of the normalized form pulled back to the coordinates of form.
  Int W(const Int& x, const Int& y) const;
};

struct ResolventSample {
  Complex xi, eta, z;
  long precision_bits;
  QuarticForm form;
  Int x, y;
  /// |1 - z| - 1 and |eta - conj(xi)|, kept for reporting.
  Real unit_residual;
};

struct GridReport {
  Real max_diagonal_residual;
  /// max | |xi eta| - (H^2 |A4|)^(1/4) / sqrt 3 |.
  Real max_c62_residual;
  /// max | |xi eta| - |W| / sqrt(12 A3^2 sqrt|A4|) |.
  Real max_w_residual;
  int points = 0;
};

ResolventBasis resolvent_basis(const QuarticForm& f, long precision = Real::kDefaultBits);
/// Checks the diagonal identity and the |xi eta| identities on the (2 radius + 1)^2 grid.
GridReport grid_check(const ResolventBasis& basis, long radius = 10);

ResolventSample z_value(const ResolventBasis& basis, const Int& x, const Int& y);
/// k minimizing |i^k - eta/xi|, smallest k on ties.
int omega_assoc(const ResolventBasis& basis, const Int& x, const Int& y);
int omega_index(const ResolventSample& sample);
/// i^k as a complex number.
Complex omega_value(int k, long bits);

struct GapCheck {
  bool holds;
  Real distance;  // |omega - eta/xi|
  Real bound8;    // (pi/8)|z|
  Real bound12;   // (pi/12)|z|
};
GapCheck gap_lemma_check(const ResolventSample& sample);

/// |4 theta| / sqrt(2 - 2 cos 4 theta).
Real gap_kernel(const Real& theta);

}  // namespace quartic
