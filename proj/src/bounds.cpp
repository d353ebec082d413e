#include "quartic/bounds.hpp"

#include "quartic/errors.hpp"
#include "quartic/pade.hpp"

namespace quartic {

namespace {

void check_ctx(const GapContext& ctx) {
  if (ctx.I <= 0) throw DomainError("gap context needs I > 0");
  if (ctx.h <= 0) throw DomainError("gap context needs h > 0");
  if (ctx.A4 == 0) throw DomainError("gap context needs A4 != 0");
}

Real R(const Int& v, long bits) { return Real(v, bits); }
Real R(long v, long bits) { return Real(v, bits); }
Real R(const Rat& v, long bits) { return Real(v, bits); }

// sqrt(3 I |A4|)
Real s3ia4(const GapContext& ctx) {
  return sqrt(R(Int(3 * ctx.I * abs(ctx.A4)), ctx.precision_bits));
}

}  // namespace

GapContext gap_context(const ResolventBasis& basis, const Int& h) {
  return {basis.I, h, basis.normalized_hessian.A[0], basis.A4, basis.precision_bits};
}

Real growth_step(const Real& xi_abs, const GapContext& ctx) {
  check_ctx(ctx);
  long b = ctx.precision_bits;
  if (xi_abs.sign() <= 0) throw DomainError("growth step needs |xi| > 0");
  Real den = pi(b) * sqrt(R(3L, b)) * R(ctx.h, b) * root(R(Int(abs(ctx.A4)), b), 4);
  return pow(xi_abs, 3L) / den;
}

Real equation_threshold_constant(long bits) {
  Real s3 = sqrt(R(3L, bits));
  Real p = pi(bits);
  Real num = R(72L, bits) * s3 * pow(R(4L, bits) * s3, R(Rat(9, 4), bits));
  return num / (R(2L, bits) * p * pow(R(5L, bits) * p, 3L));
}

Real inequality_threshold_constant(long bits) {
  Real s3 = sqrt(R(3L, bits));
  return pow(R(4L, bits) * s3, R(Rat(9, 4), bits)) * pow(R(3L, bits) / (R(2L, bits) * pi(bits)), 4L);
}

Real xi1_threshold(const GapContext& ctx, ThresholdVariant variant) {
  check_ctx(ctx);
  long b = ctx.precision_bits;
  Real I98 = pow(R(ctx.I, b), R(Rat(9, 8), b));
  Real a18 = root(R(Int(abs(ctx.A4)), b), 8);
  Real h = R(ctx.h, b);
  if (variant == ThresholdVariant::Equation) {
    // I > 36.6 h^2, i.e. 10 I > 366 h^2.
    if (10 * ctx.I <= 366 * ctx.h * ctx.h)
      throw HypothesisNotMet("equation threshold needs I > 36.6 h^2");
    return R(Rat(39, 100), b) * I98 * a18 / pow(h, R(Rat(7, 4), b));
  }
  return R(4L, b) * pow(h, R(Rat(11, 4), b)) * I98 * a18;
}

Real lambda_lower(const Int& A0, const Int& I, int g, long bits) {
  if (A0 >= 0 || I <= 0) throw DomainError("lambda_lower needs A0 < 0 and I > 0");
  if (g != 0 && g != 1) throw InvalidInput("g must be 0 or 1");
  Real base = R(make_rat(-A0 * I, 3), bits);
  Real e = R(Rat(1, 2) - Rat(3 * g, 8), bits);
  Real scale = g == 0 ? R(1L, bits) : pow(R(2L, bits), R(Rat(-1, 4), bits));
  if (g == 0) return sqrt(base);
  return scale * pow(base, e);
}

namespace {

// (3 |A4|^(3/2) / |A0|)^(1/2), (3 |A4|^(1/2) / |A0|)^(1/2) and (3 |A4| / |A0|^(3/2))^(-g/4).
struct Pieces {
  Real p1, p2, p3;
};

Pieces pieces(int g, const GapContext& ctx) {
  long b = ctx.precision_bits;
  if (ctx.A0 == 0) throw DomainError("c1/c2 need A0 != 0");
  Real a4 = R(Int(abs(ctx.A4)), b), a0 = R(Int(abs(ctx.A0)), b);
  Real three = R(3L, b);
  Real p1 = sqrt(three * pow(a4, R(Rat(3, 2), b)) / a0);
  Real p2 = sqrt(three * sqrt(a4) / a0);
  Real p3 = pow(three * a4 / pow(a0, R(Rat(3, 2), b)), R(Rat(-g, 4), b));
  return {p1, p2, p3};
}

}  // namespace

Real c1(int r, int g, const GapContext& ctx) {
  check_ctx(ctx);
  if (r < 1 || (g != 0 && g != 1)) throw InvalidInput("c1 needs r >= 1 and g in {0, 1}");
  long b = ctx.precision_bits;
  Pieces pc = pieces(g, ctx);
  Real h = R(ctx.h, b);
  if (r == 1 && g == 0) return R(4L, b) * pi(b) * h * pc.p1;
  return R(2L, b) * sqrt(pi(b)) * h * pc.p1 * pc.p3 * two_pow(2 * r, b) / sqrt(R(long(r), b));
}

Real c2(int r, int g, const GapContext& ctx) {
  check_ctx(ctx);
  if (r < 1 || (g != 0 && g != 1)) throw InvalidInput("c2 needs r >= 1 and g in {0, 1}");
  long b = ctx.precision_bits;
  Pieces pc = pieces(g, ctx);
  Real h = R(ctx.h, b);
  Real nine = R(9L, b) * s3ia4(ctx);
  if (r == 1 && g == 0) return R(27L, b) * pow(h, 3L) * pc.p2 * pow(nine, 2L) * R(Rat(5, 128), b);
  Real tail = sqrt(R(2L, b)) / (sqrt(R(long(r), b)) * pi(b) * two_pow(2 * r, b));
  return R(27L, b) * pow(h, long(2 * r + 1 - g)) * pc.p2 * pc.p3 * pow(nine, long(2 * r - g)) * tail;
}

bool stirling_check(long k) {
  if (k < 1) throw InvalidInput("stirling_check needs k >= 1");
  Int c = binomial(2 * k, k);
  // Lower bound exactly: 4^k / (2 sqrt k) <= C  <=>  16^k <= 4 k C^2.
  Int four_k = Int(1) << static_cast<unsigned long>(2 * k);
  bool lower = four_k * four_k <= 4 * Int(k) * c * c;
  // Upper bound has pi; evaluate with enough bits to separate the sides.
  long bits = 64 + 4 * k;
  Real lhs(c, bits);
  Real rhs = Real(four_k, bits) / sqrt(pi(bits) * Real(k, bits));
  return lower && lhs < rhs;
}

ProductCheck product_constant_check(long terms, long bits) {
  if (terms < 1) throw InvalidInput("product check needs terms >= 1");
  ProductCheck out{Real(1L, bits), Real(16L, bits) / (Real(3L, bits) * sqrt(Real(2L, bits)) * pi(bits)), true, true,
                   true, 0};
  Rat X = 1;             // X_r = prod_{j<=r} (j - 3/4)(j - 1/4) / j^2
  Rat y = Rat(3, 16);    // y_r = 3/16 prod_{k<r} (k^2 + k + 3/16) / (k^2 + k)
  Rat Cg0 = 1, Cg1 = 1;  // C(r+1/4, r+1), C(r-3/4, r) built incrementally
  Rat Cb = 1;            // C(r-1/4, r)
  Real root2pi = sqrt(Real(2L, bits)) * pi(bits);
  for (long r = 1; r <= terms; ++r) {
    X *= Rat(4 * r - 3, 4) * Rat(4 * r - 1, 4) / Rat(r * r);
    X.canonicalize();
    if (r > 1) {
      Rat f = (Rat(r - 1) * r + Rat(3, 16)) / Rat((r - 1) * r);
      y *= f;
    }
    if (X * r != y && out.recurrence_matches) {
      out.recurrence_matches = false;
      if (!out.first_failure) out.first_failure = r;
    }
    Real bound = Real(1L, bits) / (root2pi * Real(r, bits));
    if (!(Real(X, bits) < bound) && out.x_bound_holds) {
      out.x_bound_holds = false;
      if (!out.first_failure) out.first_failure = r;
    }
    // C(r+1/4, r+1) = C(r-3/4, r) * (r + 1/4) / (r + 1); C(r-3/4, r) for g = 1.
    Cg1 *= make_rat(4 * r - 3, 4 * r);
    Cg0 = Cg1 * make_rat(4 * r + 1, 4 * (r + 1));
    Cb *= make_rat(4 * r - 1, 4 * r);
    if ((Cg0 * Cb > X || Cg1 * Cb > X) && out.binomial_dominated) {
      out.binomial_dominated = false;
      if (!out.first_failure) out.first_failure = r;
    }
    Rat factor = (Rat(r) * r + r + Rat(3, 16)) / Rat(r * r + r);
    out.partial_product *= Real(factor, bits);
  }
  return out;
}

Real fin2_bound(int r, const Real& xi1_abs, const GapContext& ctx, ThresholdVariant variant) {
  check_ctx(ctx);
  if (r < 1) throw InvalidInput("fin2_bound needs r >= 1");
  if (!(xi1_abs > xi1_threshold(ctx, variant))) throw HypothesisNotMet("|xi_1| is below the threshold");
  long b = ctx.precision_bits;
  Real h = R(ctx.h, b);
  Real a4 = R(Int(abs(ctx.A4)), b);
  Real lead = two_pow(2 * r, b) * sqrt(R(long(r), b)) / R(27L, b);
  Real mid = root(R(Int(abs(ctx.A0)), b), 8) / (sqrt(R(3L, b) * sqrt(a4)) * pow(h, long(2 * r + 1)));
  Real nine = R(9L, b) * s3ia4(ctx);
  return lead * mid * pow(nine, long(-2 * r)) * pow(xi1_abs, long(4 * r + 3));
}

Real chained_z_bound(const Real& z_abs, const GapContext& ctx) {
  check_ctx(ctx);
  long b = ctx.precision_bits;
  Real k = R(8L, b) * R(ctx.h, b) * s3ia4(ctx);
  Real xi = root(k / z_abs, 4);
  Real next = growth_step(xi, ctx);
  return k / pow(next, 4L);
}

Real chained_z_closed_form(const Real& z_abs, const GapContext& ctx) {
  check_ctx(ctx);
  long b = ctx.precision_bits;
  Real h = R(ctx.h, b);
  return R(3L, b) * pow(pi(b), 4L) * pow(z_abs, 3L) * h * h / (R(64L, b) * R(ctx.I, b));
}

Real chained_threshold_ratio(long bits) { return Real(3L, bits) * pow(pi(bits), 4L) / Real(8L, bits); }

}  // namespace quartic
