#pragma once

// Test-side reference computations. Each one is written from the textbook formula or by
// brute force and shares no code path with the library routine it checks.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using Coeffs = std::array<Z, 5>;

inline Z I_of(const Coeffs& c) { return 12 * c[0] * c[4] - 3 * c[1] * c[3] + c[2] * c[2]; }

// Sign convention with +2 a2^3, the negative of the classical catalecticant form.
inline Z J_of(const Coeffs& c) {
  const Z &a = c[0], &b = c[1], &d = c[2], &e = c[3], &f = c[4];
  return 2 * d * d * d - 9 * b * d * e + 27 * b * b * f - 72 * a * d * f + 27 * a * e * e;
}

// Classical 16-term discriminant of a x^4 + b x^3 + c x^2 + d x + e.
inline Z disc_of(const Coeffs& k) {
  const Z &a = k[0], &b = k[1], &c = k[2], &d = k[3], &e = k[4];
  return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
         144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
         6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
         16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
         18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e +
         b * b * c * c * d * d;
}

// F_xx F_yy - F_xy^2 expanded from the three quadratic second partials.
inline Coeffs hessian_of(const Coeffs& a) {
  std::array<Z, 3> fxx, fyy, fxy;
  for (int j = 0; j < 3; ++j) {
    fxx[j] = a[j] * (4 - j) * (3 - j);
    fyy[j] = a[j + 2] * (j + 2) * (j + 1);
    fxy[j] = a[j + 1] * (3 - j) * (j + 1);
  }
  Coeffs h{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i + j] += fxx[i] * fyy[j] - fxy[i] * fxy[j];
  return h;
}

inline long eval(const std::array<long, 5>& a, long x, long y) {
  long x2 = x * x, y2 = y * y;
  return a[0] * x2 * x2 + a[1] * x2 * x * y + a[2] * x2 * y2 + a[3] * x * y2 * y + a[4] * y2 * y2;
}

// Every +-(x, y) with |F(x, y)| = h and max(|x|, |y|) <= bound, stored with y > 0 or (y = 0, x > 0).
struct Hit {
  long x, y, value;
};
inline std::vector<Hit> brute_solve(const std::array<long, 5>& a, long h, long bound) {
  std::vector<Hit> out;
  for (long y = 0; y <= bound; ++y)
    for (long x = -bound; x <= bound; ++x) {
      if (y == 0 && x <= 0) continue;
      long v = eval(a, x, y);
      if (v == h || v == -h) out.push_back({x, y, v});
    }
  return out;
}

// Smallest nonzero value of a u^2 + 2 b u v + d v^2 over a box, for definite forms.
inline long brute_min(long a, long b, long d, long box) {
  long best = -1;
  for (long u = -box; u <= box; ++u)
    for (long v = -box; v <= box; ++v) {
      if (u == 0 && v == 0) continue;
      long val = a * u * u + 2 * b * u * v + d * v * v;
      if (best < 0 || val < best) best = val;
    }
  return best;
}

// Coefficients of (1 - z)^(1/4) from c_{k+1} = c_k (k - 1/4) / (k + 1).
inline std::vector<Q> quarter_root(int terms) {
  std::vector<Q> c(static_cast<std::size_t>(terms));
  c[0] = 1;
  for (int k = 0; k + 1 < terms; ++k) {
    c[k + 1] = c[k] * Q(4 * k - 1, 4 * (k + 1));
    c[k + 1].canonicalize();
  }
  return c;
}

inline std::vector<Q> mul(const std::vector<Q>& a, const std::vector<Q>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Q> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Index of the first nonzero coefficient of A - (1 - z)^(1/4) B, up to `terms`.
inline int contact(const std::vector<Q>& A, const std::vector<Q>& B, int terms) {
  std::vector<Q> prod = mul(quarter_root(terms), B);
  for (int k = 0; k < terms; ++k) {
    Q a = k < static_cast<int>(A.size()) ? A[k] : Q(0);
    Q p = k < static_cast<int>(prod.size()) ? prod[k] : Q(0);
    if (a != p) return k;
  }
  return terms;
}

// A^4 - (1 - z) B^4 as a coefficient vector.
inline std::vector<Q> quartic_difference(const std::vector<Q>& A, const std::vector<Q>& B) {
  std::vector<Q> A2 = mul(A, A), B2 = mul(B, B);
  std::vector<Q> A4 = mul(A2, A2), B4 = mul(mul(B2, B2), {Q(1), Q(-1)});
  std::vector<Q> out(std::max(A4.size(), B4.size()));
  for (std::size_t i = 0; i < A4.size(); ++i) out[i] += A4[i];
  for (std::size_t i = 0; i < B4.size(); ++i) out[i] -= B4[i];
  return out;
}

// Published rows, copied independently of the library's embedded table.
struct Row {
  std::array<long, 5> form;
  long I;
  std::vector<std::pair<long, long>> solutions;
};
inline const std::vector<Row>& published_table() {
  static const std::vector<Row> rows = {
      {{1, -1, -6, 1, 1}, 51, {{-1, 0}, {0, 1}, {1, 2}, {-2, 1}}},
      {{1, 2, -6, -2, 1}, 60, {{1, 0}, {0, 1}}},
      {{1, 0, -12, 16, -4}, 96, {{5, 2}, {1, 3}, {1, 1}, {1, 0}}},
      {{1, 8, 6, -4, -2}, 108, {{1, 0}, {-1, 1}}},
      {{1, 1, -15, 18, -4}, 123, {{1, 1}, {1, 0}}},
  };
  return rows;
}

// Published scaled Pade polynomials A_r, B_r and F_r, lowest degree first.
struct PadeRow {
  int r;
  std::vector<const char*> A, B, F;
};
inline const std::vector<PadeRow>& published_pade() {
  static const std::vector<PadeRow> rows = {
      {1, {"8", "-5"}, {"8", "-3"}, {"320", "-320", "81"}},
      {2, {"64", "-72", "15"}, {"64", "-56", "7"}, {"86016", "-172032", "114624", "-28608", "2401"}},
      {3,
       {"2560", "-4160", "1872", "-195"},
       {"2560", "-3520", "1232", "-77"},
       {"14057472000", "-42172416000", "48483635200", "-26679910400", "7150266240", "-839047040", "35153041"}},
      {4,
       {"28672", "-60928", "42432", "-10608", "663"},
       {"28672", "-53760", "31680", "-6160", "231"},
       {"13989396348928", "-55957585395712", "91916125077504", "-79896826347520", "39463764078592",
        "-11050000539648", "1648475542656", "-113348764800", "2847396321"}},
      {5,
       {"98304", "-258048", "243712", "-99008", "15912", "-663"},
       {"98304", "-233472", "194560", "-66880", "8360", "-209"},
       {"121733331812352", "-608666659061760", "1301756554248192", "-1555026262622208", "1136607561252864",
        "-523630732640256", "151029162176512", "-26204424888320", "2515441608384", "-113971885760",
        "1908029761"}},
  };
  return rows;
}

inline std::vector<Q> to_q(const std::vector<const char*>& v) {
  std::vector<Q> out;
  for (const char* s : v) out.emplace_back(s);
  return out;
}

// Nearest fourth root of unity index to w (i^k).
inline int nearest_omega(std::complex<double> w) {
  const std::complex<double> roots[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int best = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(w - roots[k]) < std::abs(w - roots[best])) best = k;
  return best;
}

}  // namespace oracle
