#pragma once

#include <string>
#include <vector>

#include "quartic/poly.hpp"
#include "quartic/real.hpp"

namespace quartic {

/// a (a - 1) ... (a - m + 1) / m!.
Rat frac_binomial(const Rat& a, long m);
Int binomial(long n, long k);

struct PadePair {
  int r = 1;
  int g = 0;
  RationalPoly A, B;
};

/// A_{r,g}, B_{r,g} from the hypergeometric sums.
PadePair pade_pair(int r, int g);
/// A_r, B_r: the (r, 0) pair jointly scaled to coprime integers with positive constant term.
PadePair scaled_pair(int r);
/// The scalar taking (A_{r,0}, B_{r,0}) to (A_r, B_r).
Rat scaled_pair_factor(int r);
/// F_r = (A_r^4 - (1 - z) B_r^4) / z^(2r+1); throws Inconsistency if the division is not exact.
RationalPoly quartic_identity(int r);

/// First `terms` coefficients of (1 - z)^(1/4).
std::vector<Rat> quarter_root_series(int terms);
/// Coefficients of A - (1 - z)^(1/4) B up to z^(terms-1).
std::vector<Rat> pade_remainder_series(const PadePair& pair, int terms);
/// Order of vanishing at 0 of A - (1 - z)^(1/4) B, or `terms` if every computed coefficient is 0.
int contact_order(const PadePair& pair, int terms);

struct IdentityCheck {
  std::string name;
  BinaryForm expected;
  BinaryForm computed;
  bool matches;
};
/// The homogenized combination identities for r = 1..5, with the stated right-hand sides.
std::vector<IdentityCheck> combination_identities();

/// |F_{r,g}(z)| against its binomial bound; z must satisfy |z| < 1.
struct RemainderBound {
  bool holds;
  Real value;
  Real bound;
};
RemainderBound remainder_bound_check(int r, int g, const Complex& z, long precision = Real::kDefaultBits);
/// |A_{r,g}(z)| <= C(2r - g, r) for |1 - z| <= 1.
bool a_bound_check(int r, int g, const Complex& z);
/// A_{r,0}(z) B_{r+h,1}(z) != A_{r+h,1}(z) B_{r,0}(z), exactly.
bool wronskian_nonzero(int r, int h, const Rat& z);

struct ContactResidual {
  int r;
  int measured_degree_P;
  int measured_degree_Q;
  /// Largest normalized |d^k/dx^k (alpha P_r - Q_r)(alpha)| / k! over roots alpha and k <= 2r.
  Real max_residual;
  /// Smallest k at which the normalized derivative is clearly nonzero at some root, or 2r+1 if none.
  int order;
};

struct ThueRecurrenceState {
  RationalPoly P, U, Y;
  int n = 4;
  Rat h_const;
  /// Determinant of the kernel system; equals 4J for a quartic.
  Rat kernel_det;
  std::vector<Rat> c, k;  // c[r], k[r] for r >= 1; index 0 unused for k
  std::vector<RationalPoly> Ps, Qs;
  std::vector<ContactResidual> contact;
  bool ch2_holds = false;
  bool h_constant = false;
};

/// Builds U from the kernel of the 3x3 system, then P_r, Q_r up to depth.
/// literal_q0 uses Q_0 = (2/3) h instead of (2/3) h x.
ThueRecurrenceState thue_recurrence(const RationalPoly& P, int depth, long precision = 256,
                                    bool literal_q0 = false);

}  // namespace quartic
