#include "quartic/resolvent.hpp"

#include "quartic/errors.hpp"

namespace quartic {

Complex ResolventBasis::xi(const Int& x, const Int& y) const {
  long bits = precision_bits;
  Complex l1 = Complex(Real(x, bits)) - rho * Real(y, bits);
  return scale * l1;
}

Complex ResolventBasis::diagonal_value(const Int& x, const Int& y) const {
  Complex a = xi(x, y);
  Complex b = a.conj();
  return (pow(a, 4) - pow(b, 4)) / K;
}

Int ResolventBasis::W(const Int& x, const Int& y) const {
  // (x, y) = M (X, Y), so the normalized coordinates are M^-1 (x, y).
  UnimodularMap inv = normalized.map.inverse();
  Int X = inv.m * x + inv.l * y, Y = inv.p * x + inv.q * y;
  const auto& A = normalized_hessian.A;
  return 2 * A[1] * A[4] * X * X + A[3] * A[3] * X * Y + 2 * A[3] * A[4] * Y * Y;
}

ResolventBasis resolvent_basis(const QuarticForm& f, long precision) {
  if (precision < 32) throw PrecisionError("resolvent precision below 32 bits");
  ExactCovariant q = exact_covariant(f);
  Int I = invariant_I(f);
  if (I <= 0) throw UnsupportedBranch("resolvent needs I > 0, form " + f.to_string());
  ReductionResult norm = normalize_small_A4(f);
  HessianCoefficients hn = hessian(norm.reduced_form);
  if (hn.A[3] * hn.A[4] == 0) throw SearchFailure("normalization left A3 A4 = 0 for " + f.to_string());

  const long bits = precision;
  ResolventBasis b{f, norm, hn, I, hn.A[4], Complex(bits), Complex(bits), Complex(bits), bits};
  // sqrt(-3I) = i sqrt(3I) and A4 < 0 for split forms, giving K = -8 i sqrt(3 I |A4|).
  Real kmag = sqrt(Real(Int(3 * I * abs(hn.A[4])), bits)) * 8L;
  if (hn.A[4] < 0) {
    b.K = Complex(Real(0L, bits), -kmag);
  } else {
    b.K = Complex(kmag, Real(0L, bits));
  }
  Real disc = sqrt(Real(Rat(4 * q.a * q.c - q.b * q.b), bits));
  Real two_a(Rat(2 * q.a), bits);
  b.rho = Complex(Real(Rat(-q.b), bits) / two_a, -disc / two_a);

  Complex rb = b.rho.conj();
  Complex fr = f(rb, Complex(Real(1L, bits)));
  Complex c1 = fr / pow(rb - b.rho, 4);
  b.scale = principal_root(b.K * c1, 4);
  return b;
}

GridReport grid_check(const ResolventBasis& basis, long radius) {
  long bits = basis.precision_bits;
  GridReport rep{Real(0L, bits), Real(0L, bits), Real(0L, bits), 0};
  BinaryForm H = hessian(basis.form).as_binary();
  const auto& A = basis.normalized_hessian.A;
  Real abs_a4(Int(abs(basis.A4)), bits);
  Real sqrt3 = sqrt(Real(3L, bits));
  Real w_den = sqrt(Real(Int(12 * A[3] * A[3]), bits) * sqrt(abs_a4));
  for (long x = -radius; x <= radius; ++x)
    for (long y = -radius; y <= radius; ++y) {
      Int X = x, Y = y;
      Complex d = basis.diagonal_value(X, Y);
      Complex diff = d - Complex(Real(basis.form(X, Y), bits));
      rep.max_diagonal_residual = max(rep.max_diagonal_residual, diff.abs());
      Complex a = basis.xi(X, Y);
      Real prod = (a * a.conj()).abs();
      Int h = H(X, Y);
      Real c62 = root(Real(Int(h * h), bits) * abs_a4, 4) / sqrt3;
      rep.max_c62_residual = max(rep.max_c62_residual, abs(prod - c62));
      Real w = abs(Real(basis.W(X, Y), bits)) / w_den;
      rep.max_w_residual = max(rep.max_w_residual, abs(prod - w));
      ++rep.points;
    }
  return rep;
}

ResolventSample z_value(const ResolventBasis& basis, const Int& x, const Int& y) {
  long bits = basis.precision_bits;
  Complex a = basis.xi(x, y);
  if (a.abs().is_zero()) throw DomainError("xi vanishes at (" + x.get_str() + ", " + y.get_str() + ")");
  Complex b = a.conj();
  Complex ratio = b / a;
  Complex one(Real(1L, bits));
  Complex z = one - pow(ratio, 4);
  Real unit = abs((one - z).abs() - Real(1L, bits));
  return {a, b, z, bits, basis.form, x, y, unit};
}

Complex omega_value(int k, long bits) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Complex(Real(1L, bits), Real(0L, bits));
    case 1: return Complex(Real(0L, bits), Real(1L, bits));
    case 2: return Complex(Real(-1L, bits), Real(0L, bits));
    default: return Complex(Real(0L, bits), Real(-1L, bits));
  }
}

int omega_index(const ResolventSample& s) {
  Complex ratio = s.eta / s.xi;
  int best = 0;
  Real best_d = (omega_value(0, s.precision_bits) - ratio).abs();
  for (int k = 1; k < 4; ++k) {
    Real d = (omega_value(k, s.precision_bits) - ratio).abs();
    if (d < best_d) {
      best = k;
      best_d = d;
    }
  }
  return best;
}

int omega_assoc(const ResolventBasis& basis, const Int& x, const Int& y) {
  return omega_index(z_value(basis, x, y));
}

GapCheck gap_lemma_check(const ResolventSample& s) {
  long bits = s.precision_bits;
  Complex ratio = s.eta / s.xi;
  Real dist = (omega_value(omega_index(s), bits) - ratio).abs();
  Real zabs = s.z.abs();
  Real p = pi(bits);
  Real b8 = p * zabs / 8L, b12 = p * zabs / 12L;
  Real slack = two_pow(-(bits / 2), bits);
  bool ok = dist <= b8 + slack;
  if (zabs < Real(1L, bits)) ok = ok && dist <= b12 + slack;
  return {ok, dist, b8, b12};
}

Real gap_kernel(const Real& theta) {
  long bits = theta.precision();
  Real four = theta * 4L;
  return abs(four) / sqrt(Real(2L, bits) - cos(four) * 2L);
}

}  // namespace quartic
