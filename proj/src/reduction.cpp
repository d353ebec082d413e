#include "quartic/reduction.hpp"

#include <algorithm>
#include <tuple>

#include "quartic/errors.hpp"

namespace quartic {

ExactCovariant exact_covariant(const QuarticForm& f) {
  if (invariant_J(f) != 0) throw UnsupportedBranch("covariant m needs J = 0, form " + f.to_string());
  auto A = hessian(f).A;
  if (A[0] >= 0) throw Inconsistency("-H/9 is not a positive definite square for " + f.to_string());
  ExactCovariant q{make_rat(-A[0], 3), make_rat(-A[1], 6), make_rat(-A[2], 6) + make_rat(A[1] * A[1], 24 * A[0]), A[0]};
  q.a.canonicalize();
  q.b.canonicalize();
  q.c.canonicalize();
  // 9 q^2 = A0 H coefficientwise.
  Rat lhs[5] = {9 * q.a * q.a, 18 * q.a * q.b, 9 * (q.b * q.b + 2 * q.a * q.c), 18 * q.b * q.c, 9 * q.c * q.c};
  for (int k = 0; k < 5; ++k)
    if (lhs[k] != Rat(A[0] * A[static_cast<std::size_t>(k)]))
      throw Inconsistency("-H/9 is not the square of a quadratic for " + f.to_string());
  if (4 * q.a * q.c - q.b * q.b <= 0) throw Inconsistency("covariant m is not definite for " + f.to_string());
  return q;
}

DefiniteQuadratic covariant_m(const QuarticForm& f, long precision) {
  ExactCovariant q = exact_covariant(f);
  Real s = sqrt(Real(Int(-q.A0), precision));
  return {Real(q.a, precision) / s, Real(q.b, precision) / s, Real(q.c, precision) / s, precision};
}

bool is_reduced(const QuarticForm& f) {
  ExactCovariant q = exact_covariant(f);
  return abs(q.b) <= q.a && q.a <= q.c;
}

ReductionResult reduce(const QuarticForm& f) {
  ExactCovariant q = exact_covariant(f);
  Rat a = q.a, b = q.b, c = q.c;
  UnimodularMap M;
  while (true) {
    if (abs(b) > a) {
      // x -> x + k y moves b to b + 2ak in (-a, a].
      Rat t = (a - b) / (2 * a);
      Int k;
      mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
      c = a * k * k + b * k + c;
      b = b + 2 * a * k;
      M = M * UnimodularMap{1, k, 0, 1};
    } else if (a > c) {
      std::swap(a, c);
      b = -b;
      M = M * UnimodularMap{0, -1, 1, 0};
    } else {
      break;
    }
  }
  QuarticForm g = apply_unimodular(f, M);
  if (!is_reduced(g)) throw Inconsistency("reduction of " + f.to_string() + " did not reach a reduced form");
  return {g, M};
}

namespace {

// Completes the primitive column (l, q) to a unimodular map and shears until A3 != 0.
// Every candidate sends (0, 1) to (l, q), so A4 = H(l, q) throughout.
std::optional<ReductionResult> complete_and_shear(const QuarticForm& f, const Int& L, const Int& Q,
                                                  long search_bound) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Q.get_mpz_t(), L.get_mpz_t());
  if (g != 1) throw InvalidInput("column (l, q) must be primitive");
  // m q - l p = 1 with m = s, p = -t.
  Int m = s, p = -t;
  for (long step = 0; step <= 2 * search_bound; ++step) {
    long shear = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    UnimodularMap M{m + L * shear, L, p + Q * shear, Q};
    QuarticForm g2 = apply_unimodular(f, M);
    auto A2 = hessian(g2).A;
    if (A2[4] == 0) throw Inconsistency("shear changed the y^4 Hessian coefficient");
    if (A2[3] != 0) return ReductionResult{g2, M};
  }
  return std::nullopt;
}

}  // namespace

ReductionResult normalize_A3A4(const QuarticForm& f, long search_bound) {
  if (invariant_J(f) != 0) throw UnsupportedBranch("normalization needs J = 0, form " + f.to_string());
  auto A = hessian(f).A;
  if (A[3] != 0 && A[4] != 0) return {f, UnimodularMap::identity()};
  BinaryForm H = hessian(f).as_binary();
  for (long height = 1; height <= search_bound; ++height) {
    // (l, q) with max(|l|, |q|) = height, one of each +- pair, (0, 1) first.
    std::vector<std::pair<long, long>> ring;
    for (long l = -height; l <= height; ++l)
      for (long qq = 0; qq <= height; ++qq) {
        if (std::max(std::labs(l), qq) != height || (qq == 0 && l < 0)) continue;
        ring.emplace_back(l, qq);
      }
    std::sort(ring.begin(), ring.end(), [](auto x, auto y) {
      return std::make_tuple(std::labs(x.first), -x.second, -x.first) <
             std::make_tuple(std::labs(y.first), -y.second, -y.first);
    });
    for (auto [l, q] : ring) {
      Int L = l, Q = q, g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Q.get_mpz_t(), L.get_mpz_t());
      if (g != 1) continue;
      if (H(L, Q) == 0) continue;
      if (auto r = complete_and_shear(f, L, Q, search_bound)) return *r;
    }
  }
  throw SearchFailure("no equivalent form with A3 A4 != 0 found for " + f.to_string() + " within bound " +
                      std::to_string(search_bound));
}

HermiteResult hermite_small_value(const Rat& f11, const Rat& f12, const Rat& f22) {
  Rat D = f11 * f22 - f12 * f12;
  if (D == 0) throw DegenerateForm("Hermite search needs a nonzero determinant");
  Rat bound_sq = 4 * abs(D) / 3;
  auto value = [&](const Int& u1, const Int& u2) { return Rat(f11 * u1 * u1 + 2 * f12 * u1 * u2 + f22 * u2 * u2); };
  HermiteResult best{0, 0, 0, false};
  bool found = false;
  if (D > 0) {
    // Definite: Gauss reduction of (a, b, c) = (f11, 2 f12, f22) up to overall sign.
    int sign = f11 > 0 ? 1 : -1;
    Rat a = f11 * sign, b = 2 * f12 * sign, c = f22 * sign;
    UnimodularMap M;
    while (true) {
      if (abs(b) > a) {
        Rat t = (a - b) / (2 * a);
        Int k;
        mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        c = a * k * k + b * k + c;
        b = b + 2 * a * k;
        M = M * UnimodularMap{1, k, 0, 1};
      } else if (a > c) {
        std::swap(a, c);
        b = -b;
        M = M * UnimodularMap{0, -1, 1, 0};
      } else {
        break;
      }
    }
    best = {M.m, M.p, value(M.m, M.p), false};
    found = true;
  } else {
    // Indefinite: widen the box until a value within the bound appears.
    for (long h = 1; !found; ++h) {
      for (long u1 = -h; u1 <= h; ++u1)
        for (long u2 = 0; u2 <= h; ++u2) {
          if (std::max(std::labs(u1), u2) != h || (u2 == 0 && u1 <= 0)) continue;
          Rat v = value(u1, u2);
          if (v == 0) continue;
          if (v * v <= bound_sq && (!found || abs(v) < abs(best.attained))) {
            best = {u1, u2, v, false};
            found = true;
          }
        }
      if (h > 100000) throw SearchFailure("Hermite search exceeded its box");
    }
  }
  best.on_boundary = best.attained * best.attained == bound_sq;
  return best;
}

namespace {

std::optional<UnimodularMap> match_reduced(const QuarticForm& f, const QuarticForm& g, long bound) {
  // Columns of T must carry F to the first and last coefficients of G.
  std::vector<std::pair<long, long>> first, last;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      Int v = f(Int(x), Int(y));
      if (v == g.a[0]) first.emplace_back(x, y);
      if (v == g.a[4]) last.emplace_back(x, y);
    }
  for (auto [m, p] : first)
    for (auto [l, q] : last) {
      long det = m * q - l * p;
      if (det != 1 && det != -1) continue;
      UnimodularMap T{m, l, p, q};
      if (apply_unimodular(f, T) == g) return T;
    }
  return std::nullopt;
}

}  // namespace

std::optional<UnimodularMap> equivalent(const QuarticForm& f, const QuarticForm& g, long sweep_bound) {
  if (invariant_I(f) != invariant_I(g) || invariant_J(f) != invariant_J(g)) return std::nullopt;
  if (f == g) return UnimodularMap::identity();
  ReductionResult rf = reduce(f), rg = reduce(g);
  auto T = match_reduced(rf.reduced_form, rg.reduced_form, sweep_bound);
  if (!T) return std::nullopt;
  UnimodularMap M = rf.map * *T * rg.map.inverse();
  if (apply_unimodular(f, M) != g) throw Inconsistency("composed equivalence map does not carry F to G");
  return M;
}

std::optional<SignedEquivalence> equivalent_up_to_sign(const QuarticForm& f, const QuarticForm& g,
                                                       long sweep_bound) {
  if (auto m = equivalent(f, g, sweep_bound)) return SignedEquivalence{*m, 1};
  if (auto m = equivalent(f, g.negated(), sweep_bound)) return SignedEquivalence{*m, -1};
  return std::nullopt;
}

HessianBoundCheck hessian_bound_check(const QuarticForm& f, const Rat& constant, long box) {
  QuarticForm Hf = hessian(f).as_form();
  Int I = invariant_I(f);
  HessianBoundCheck out;
  Rat worst;
  // H is even in (x, y), so y > 0 covers every y != 0. The reported point is the most
  // violating one, smallest |x| first among ties.
  for (long yy = 1; yy <= box; ++yy) {
    for (long ax = 0; ax <= box; ++ax) {
      for (long xx : {ax, -ax}) {
        if (ax == 0 && xx < 0) continue;
        Int x = xx, y = yy;
        Int v = abs(Hf(x, y));
        Rat ratio = make_rat(v, y * y * y * y);
        if (ratio < constant * Rat(I) && (out.holds || ratio < worst)) {
          out.holds = false;
          worst = ratio;
          out.counterexample = std::make_pair(x, y);
          out.H_value = v;
        }
      }
    }
  }
  return out;
}

ReductionResult normalize_small_A4(const QuarticForm& f, long search_bound) {
  ReductionResult first = normalize_A3A4(f, search_bound);
  auto A = hessian(first.reduced_form).A;
  // H = W^2 / (4 A3^2 A4) with W = 2 A1 A4 x^2 + A3^2 x y + 2 A3 A4 y^2; a small value of W is a small A4.
  HermiteResult hv = hermite_small_value(Rat(2 * A[1] * A[4]), make_rat(A[3] * A[3], 2), Rat(2 * A[3] * A[4]));
  Int g;
  mpz_gcd(g.get_mpz_t(), hv.u1.get_mpz_t(), hv.u2.get_mpz_t());
  Int L = hv.u1 / g, Q = hv.u2 / g;
  auto second = complete_and_shear(first.reduced_form, L, Q, search_bound);
  if (!second)
    throw SearchFailure("no shear with A3 != 0 for " + f.to_string() + " within bound " + std::to_string(search_bound));
  return {second->reduced_form, first.map * second->map};
}

}  // namespace quartic
