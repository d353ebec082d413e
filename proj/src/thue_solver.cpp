#include "quartic/thue_solver.hpp"

#include <algorithm>
#include <functional>

#include "quartic/errors.hpp"
#include "quartic/resolvent.hpp"

namespace quartic {

bool canonical_less(const SolutionRecord& a, const SolutionRecord& b) {
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

bool y_threshold(const Int& y, const Int& h, const Int& I) {
  if (I <= 0) throw DomainError("threshold needs I > 0");
  Int y2 = y * y, y4 = y2 * y2, h2 = h * h;
  return 3 * I * y4 * y4 >= h2 * h2 * h2;
}

namespace {

enum class Mode { Equation, Inequality };

struct Stripe {
  std::array<Int, 5> c;  // f_y(x) = c0 x^4 + c1 x^3 + c2 x^2 + c3 x + c4
  Int operator()(const Int& x) const { return (((c[0] * x + c[1]) * x + c[2]) * x + c[3]) * x + c[4]; }
};

// Smallest x in [lo, hi] with s * v(x) >= t for s * v nondecreasing; hi + 1 if none.
Int first_at_least(const Stripe& v, int s, Int lo, Int hi, const Int& t) {
  Int end = hi + 1;
  while (lo <= hi) {
    Int mid = lo + (hi - lo) / 2;
    if (s * v(mid) >= t) {
      end = mid;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  return end;
}

// Integers x in the box with |f_y(x)| <= h (inequality) or |f_y(x)| = h (equation).
void scan_stripe(const Stripe& v, const std::vector<Rat>& crit, const Int& y, long bound, const Int& h, Mode mode,
                 const std::function<void(const Int&, const Int&)>& emit) {
  const Int B = bound;
  auto accept = [&](const Int& x) {
    Int val = v(x);
    Int mag = abs(val);
    if (mode == Mode::Equation ? mag == h : (mag <= h && val != 0)) emit(x, val);
  };
  // Windows around every critical point, merged and clipped.
  std::vector<std::pair<Int, Int>> win;
  for (const Rat& r : crit) {
    Rat center = r * y;
    Int fl, ce;
    mpz_fdiv_q(fl.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
    mpz_cdiv_q(ce.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
    Int lo = std::max(Int(fl - 2), Int(-B)), hi = std::min(Int(ce + 2), B);
    if (lo <= hi) win.emplace_back(lo, hi);
  }
  std::sort(win.begin(), win.end());
  std::vector<std::pair<Int, Int>> merged;
  for (auto& w : win) {
    if (!merged.empty() && w.first <= merged.back().second + 1)
      merged.back().second = std::max(merged.back().second, w.second);
    else
      merged.push_back(w);
  }
  Int cursor = -B;
  auto gap = [&](Int lo, Int hi) {
    if (lo > hi) return;
    // f_y is strictly monotone here.
    int s = v(hi) >= v(lo) ? 1 : -1;
    if (mode == Mode::Equation) {
      for (int sign : {1, -1}) {
        Int target = h * sign;
        Int x = first_at_least(v, s, lo, hi, s * target);
        if (x <= hi && v(x) == target) accept(x);
      }
    } else {
      // s*v ranges over [-h, h] on a contiguous block.
      Int from = first_at_least(v, s, lo, hi, -h);
      Int to = first_at_least(v, s, lo, hi, h + 1) - 1;
      for (Int x = from; x <= to; ++x) accept(x);
    }
  };
  for (auto& w : merged) {
    gap(cursor, w.first - 1);
    for (Int x = w.first; x <= w.second; ++x) accept(x);
    cursor = w.second + 1;
  }
  gap(cursor, B);
}

std::vector<SolutionRecord> solve(const QuarticForm& f, const Int& h, long bound, Mode mode) {
  if (h <= 0) throw InvalidInput("h must be positive");
  if (bound < 1) throw InvalidInput("height bound must be at least 1");
  if (f.a[0] == 0 && f.a[1] == 0 && f.a[2] == 0 && f.a[3] == 0)
    throw InvalidInput("F(x, y) does not depend on x: " + f.to_string());
  RationalPoly fx({Rat(f.a[3]), Rat(2 * f.a[2]), Rat(3 * f.a[1]), Rat(4 * f.a[0])});
  long bits = 80;
  for (long b = bound; b > 0; b >>= 1) ++bits;
  std::vector<Rat> crit = real_roots(fx, bits);
  Int I = invariant_I(f);

  std::vector<SolutionRecord> out;
  auto record = [&](const Int& x, const Int& y, const Int& val) {
    SolutionRecord r{x, y, val, false, std::nullopt, std::nullopt};
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    r.primitive = g == 1;
    if (mode == Mode::Inequality && !r.primitive) return;
    if (I > 0) r.y_threshold_met = y_threshold(y, h, I);
    out.push_back(r);
  };

  // y = 0: a0 x^4 = +-h with x > 0.
  for (long x = 1; x <= bound; ++x) {
    Int val = f.a[0] * Int(x) * Int(x) * Int(x) * Int(x);
    if (abs(val) > h && mode == Mode::Equation) break;
    if (mode == Mode::Equation ? abs(val) == h : (abs(val) <= h && val != 0)) record(Int(x), Int(0), val);
    if (mode == Mode::Inequality) break;  // only (1, 0) is coprime
  }
  for (long yy = 1; yy <= bound; ++yy) {
    Int y = yy, y2 = y * y;
    Stripe v{{f.a[0], f.a[1] * y, f.a[2] * y2, f.a[3] * y2 * y, f.a[4] * y2 * y2}};
    scan_stripe(v, crit, y, bound, h, mode, [&](const Int& x, const Int& val) { record(x, y, val); });
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::vector<SolutionRecord> solve_equation(const QuarticForm& f, const Int& h, long height_bound) {
  return solve(f, h, height_bound, Mode::Equation);
}

std::vector<SolutionRecord> solve_inequality(const QuarticForm& f, const Int& h, long height_bound) {
  return solve(f, h, height_bound, Mode::Inequality);
}

void populate_omegas(const QuarticForm& f, std::vector<SolutionRecord>& records, long precision) {
  if (records.empty()) return;
  ResolventBasis basis = resolvent_basis(f, precision);
  for (auto& r : records) r.omega_index = omega_assoc(basis, r.x, r.y);
}

Census census(const std::vector<SolutionRecord>& solutions) {
  Census c;
  for (const auto& s : solutions) {
    if (!s.omega_index) throw IncompleteInput("solution (" + s.x.get_str() + ", " + s.y.get_str() + ") has no omega");
    ++c.counts[static_cast<std::size_t>(*s.omega_index)];
    ++c.total;
  }
  for (long n : c.counts)
    if (n > 3) c.within_bounds = false;
  if (c.total > 12) c.within_bounds = false;
  return c;
}

}  // namespace quartic
