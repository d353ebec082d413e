#include "quartic/pade.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "quartic/errors.hpp"

namespace quartic {

Rat frac_binomial(const Rat& a, long m) {
  if (m < 0) throw InvalidInput("binomial with negative lower index");
  Rat acc = 1;
  for (long j = 0; j < m; ++j) acc = acc * (a - j) / (j + 1);
  return acc;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

PadePair pade_pair(int r, int g) {
  if (r < 1 || (g != 0 && g != 1)) throw InvalidInput("pade_pair needs r >= 1 and g in {0, 1}");
  std::vector<Rat> a, b;
  Rat top_a = Rat(r - g) + Rat(1, 4), top_b = Rat(r) - Rat(1, 4);
  for (int m = 0; m <= r; ++m) {
    Rat sign = (m % 2 == 0) ? 1 : -1;
    a.push_back(sign * frac_binomial(top_a, m) * Rat(binomial(2 * r - g - m, r - g)));
  }
  for (int m = 0; m <= r - g; ++m) {
    Rat sign = (m % 2 == 0) ? 1 : -1;
    b.push_back(sign * frac_binomial(top_b, m) * Rat(binomial(2 * r - g - m, r)));
  }
  return {r, g, RationalPoly(std::move(a)), RationalPoly(std::move(b))};
}

Rat scaled_pair_factor(int r) {
  PadePair p = pade_pair(r, 0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto* poly : {&p.A, &p.B})
    for (const auto& c : poly->coefficients()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  Rat s = make_rat(den_lcm, num_gcd);
  if (p.A.coeff(0) < 0) s = -s;
  return s;
}

PadePair scaled_pair(int r) {
  PadePair p = pade_pair(r, 0);
  Rat s = scaled_pair_factor(r);
  return {r, 0, p.A * s, p.B * s};
}

RationalPoly quartic_identity(int r) {
  PadePair p = scaled_pair(r);
  RationalPoly one_minus_z{1, -1};
  RationalPoly diff = p.A.pow(4) - one_minus_z * p.B.pow(4);
  return diff.divide_by_power(static_cast<std::size_t>(2 * r + 1));
}

std::vector<Rat> quarter_root_series(int terms) {
  std::vector<Rat> s;
  Rat quarter(1, 4);
  for (int m = 0; m < terms; ++m) s.push_back(((m % 2 == 0) ? 1 : -1) * frac_binomial(quarter, m));
  return s;
}

std::vector<Rat> pade_remainder_series(const PadePair& pair, int terms) {
  std::vector<Rat> root = quarter_root_series(terms);
  std::vector<Rat> out(static_cast<std::size_t>(terms), Rat(0));
  for (int k = 0; k < terms; ++k) {
    Rat acc = pair.A.coeff(static_cast<std::size_t>(k));
    for (int j = 0; j <= std::min(k, pair.B.degree()); ++j)
      acc -= pair.B.coeff(static_cast<std::size_t>(j)) * root[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

int contact_order(const PadePair& pair, int terms) {
  std::vector<Rat> s = pade_remainder_series(pair, terms);
  for (int k = 0; k < terms; ++k)
    if (s[static_cast<std::size_t>(k)] != 0) return k;
  return terms;
}

std::vector<IdentityCheck> combination_identities() {
  std::vector<BinaryForm> As(6), Bs(6);
  for (int r = 1; r <= 5; ++r) {
    PadePair p = scaled_pair(r);
    As[static_cast<std::size_t>(r)] = BinaryForm::homogenize(p.A, r);
    Bs[static_cast<std::size_t>(r)] = BinaryForm::homogenize(p.B, r);
  }
  auto A = [&](int r) { return As[static_cast<std::size_t>(r)]; };
  auto B = [&](int r) { return Bs[static_cast<std::size_t>(r)]; };
  auto cof = [](int deg, std::vector<std::pair<int, long>> terms) { return BinaryForm::from_terms(deg, terms); };

  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, BinaryForm expected, BinaryForm computed) {
    bool ok = expected == computed;
    out.push_back({std::move(name), std::move(expected), std::move(computed), ok});
  };
  add("A1* - B1*", cof(1, {{1, -2}}), A(1) - B(1));
  add("B1* A2* - A1* B2*", cof(3, {{3, -10}}), B(1) * A(2) - A(1) * B(2));
  add("(-32x+7y) A2* - (-32x+15y) B2*", cof(3, {{2, 80}}),
      cof(1, {{0, -32}, {1, 7}}) * A(2) - cof(1, {{0, -32}, {1, 15}}) * B(2));
  add("B2* A3* - A2* B3*", cof(5, {{5, -210}}), B(2) * A(3) - A(2) * B(3));
  add("(1616x^2-1078xy+77y^2) A3* - (1616x^2-1482xy+195y^2) B3*", cof(5, {{3, -16800}}),
      cof(2, {{0, 1616}, {1, -1078}, {2, 77}}) * A(3) - cof(2, {{0, 1616}, {1, -1482}, {2, 195}}) * B(3));
  add("B3* A4* - A3* B4*", cof(7, {{7, -6006}}), B(3) * A(4) - A(3) * B(4));
  add("G4 A4* - H4 B4*", cof(7, {{4, -150678528}}),
      cof(3, {{0, 14178304}, {1, -15889280}, {2, 4071760}, {3, -162393}}) * A(4) -
          cof(3, {{0, 14178304}, {1, -19433856}, {2, 6714864}, {3, -466089}}) * B(4));
  // Stated as -14586 y^7, but both sides have total degree 9; the literal is kept and the
  // mismatch is reported by the caller.
  add("B4* A5* - A4* B5*", cof(9, {{7, -14586}}), B(4) * A(5) - A(4) * B(5));
  add("G5 A5* - H5 B5*", cof(9, {{5, -134424576}}),
      cof(4, {{0, 43706368}, {1, -69346048}, {2, 32767856}, {3, -4764782}, {4, 123519}}) * A(5) -
          cof(4, {{0, 43706368}, {1, -80272640}, {2, 46006896}, {3, -8845746}, {4, 391833}}) * B(5));
  return out;
}

namespace {

const std::vector<Rat>& cached_remainder_series(int r, int g, int terms) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<Rat>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(r, g, terms);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, pade_remainder_series(pade_pair(r, g), terms)).first;
  return it->second;
}

}  // namespace

RemainderBound remainder_bound_check(int r, int g, const Complex& z, long precision) {
  long bits = precision + 64;
  Complex zz = Complex(bits) + z;
  Real zabs = zz.abs();
  Real one(1L, bits);
  if (zabs >= one) throw DomainError("remainder bound needs |z| < 1");
  PadePair p = pade_pair(r, g);
  int order = 2 * r + 1 - g;
  Complex value(bits);
  if (zabs <= Real(0.25, bits)) {
    // Series: |term| <= C 4^-k, so bits/2 terms past the order reach 2^-bits. The closed form
    // loses about order * log2(1/|z|) bits to cancellation, at most 18 beyond this cutoff.
    int terms = order + static_cast<int>(bits / 2) + 8;
    const std::vector<Rat>& s = cached_remainder_series(r, g, terms);
    Complex zk(one);
    for (int k = order; k < terms; ++k) {
      value += zk * Real(s[static_cast<std::size_t>(k)], bits);
      zk *= zz;
    }
  } else {
    Complex w = Complex(one) - zz;
    Complex root = principal_root(w, 4);
    Complex num = p.A(zz) - root * p.B(zz);
    value = num / pow(zz, static_cast<unsigned long>(order));
  }
  Rat c = frac_binomial(Rat(r - g) + Rat(1, 4), r + 1 - g) * frac_binomial(Rat(r) - Rat(1, 4), r) /
          Rat(binomial(2 * r + 1 - g, r));
  Real bound = Real(c, bits) * pow(one - zabs, Real(make_rat(-order, 2), bits));
  Real slack = bound * two_pow(-(precision / 2), bits);
  Real v = value.abs();
  return {v <= bound + slack, v, bound};
}

bool a_bound_check(int r, int g, const Complex& z) {
  long bits = z.precision();
  Complex w = Complex(Real(1L, bits)) - z;
  Real slack = two_pow(-(bits / 2), bits);
  if (w.abs() > Real(1L, bits) + slack) throw DomainError("A bound needs |1 - z| <= 1");
  PadePair p = pade_pair(r, g);
  Real bound(binomial(2 * r - g, r), bits);
  return p.A(z).abs() <= bound * (Real(1L, bits) + slack);
}

bool wronskian_nonzero(int r, int h, const Rat& z) {
  if (z == 0) throw DomainError("Wronskian check needs z != 0");
  if (h != 0 && h != 1) throw InvalidInput("Wronskian shift must be 0 or 1");
  PadePair p0 = pade_pair(r, 0), p1 = pade_pair(r + h, 1);
  return p0.A(z) * p1.B(z) - p1.A(z) * p0.B(z) != 0;
}

namespace {

// Basis of the right kernel of a small rational matrix.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m) {
  std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    Rat inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -m[i][free];
    basis.push_back(v);
  }
  return basis;
}

Rat det3(const std::vector<std::vector<Rat>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

ThueRecurrenceState thue_recurrence(const RationalPoly& P, int depth, long precision, bool literal_q0) {
  if (P.degree() != 4) throw InvalidInput("thue_recurrence expects a quartic");
  if (depth < 1) throw InvalidInput("recurrence depth must be at least 1");
  ThueRecurrenceState st;
  st.P = P;
  st.n = 4;
  // P = a0 x^4 + a1 x^3 + a2 x^2 + a3 x + a4.
  Rat a0 = P.coeff(4), a1 = P.coeff(3), a2 = P.coeff(2), a3 = P.coeff(1), a4 = P.coeff(0);
  std::vector<std::vector<Rat>> sys{{12 * a0, -3 * a1, 2 * a2}, {3 * a1, -2 * a2, 3 * a3}, {2 * a2, -3 * a3, 12 * a4}};
  st.kernel_det = det3(sys);
  if (st.kernel_det != 0)
    throw UnsupportedBranch("kernel system is nonsingular (determinant " + st.kernel_det.get_str() + " = 4J)");
  auto ker = nullspace(sys);
  if (ker.empty()) throw Inconsistency("singular kernel system without kernel vector");
  st.U = RationalPoly(ker.front()).primitive();

  const RationalPoly& U = st.U;
  RationalPoly dP = P.derivative(), ddP = dP.derivative(), dU = U.derivative(), ddU = dU.derivative();
  const int n = st.n;
  RationalPoly ch2 = U * ddP - dU * dP * Rat(n - 1) + ddU * P * make_rat(n * (n - 1), 2);
  st.ch2_holds = ch2.is_zero();
  RationalPoly hpoly = (dU * dU - U * ddU * Rat(2)) * make_rat(n * n - 1, 4);
  st.h_constant = hpoly.degree() <= 0;
  st.h_const = hpoly.coeff(0);
  const Rat& h = st.h_const;
  st.Y = U * dP * Rat(2) - dU * P * Rat(n);

  // c_1, c_2 given; k_r c_r = (2r+1)/2; c_{r+1} = c_{r-1} + k_r 2 h n^2 / ((n-1)(n+1)).
  Rat step = 2 * h * n * n / Rat((n - 1) * (n + 1));
  st.c.assign(static_cast<std::size_t>(depth + 2), Rat(0));
  st.k.assign(static_cast<std::size_t>(depth + 1), Rat(0));
  st.c[0] = Rat(2, 3) * h;
  st.c[1] = Rat(3, 2);
  if (depth + 1 >= 2) st.c[2] = make_rat(2 * (2 * n - 1) * (2 * n + 1), 3 * (n - 1) * (n + 1)) * h;
  for (int r = 1; r <= depth; ++r) {
    auto ur = static_cast<std::size_t>(r);
    if (st.c[ur] == 0) throw DomainError("recurrence constant c_" + std::to_string(r) + " vanishes");
    st.k[ur] = make_rat(2 * r + 1, 2) / st.c[ur];
    if (r >= 2) st.c[ur + 1] = st.c[ur - 1] + st.k[ur] * step;
  }

  RationalPoly x{0, 1};
  RationalPoly P0 = RationalPoly::constant(Rat(2, 3) * h);
  RationalPoly Q0 = literal_q0 ? P0 : P0 * x;
  RationalPoly P1 = U * dP - dU * P * make_rat(n - 1, 2);
  RationalPoly Q1 = x * P1 - U * P;
  st.Ps = {P0, P1};
  st.Qs = {Q0, Q1};
  RationalPoly P2 = P * P;
  for (int r = 1; r < depth; ++r) {
    auto ur = static_cast<std::size_t>(r);
    st.Ps.push_back(st.Y * st.Ps[ur] * st.k[ur] - P2 * st.Ps[ur - 1]);
    st.Qs.push_back(st.Y * st.Qs[ur] * st.k[ur] - P2 * st.Qs[ur - 1]);
  }

  std::vector<Complex> roots = complex_roots(P, precision);
  Real tol = two_pow(-64, precision);
  for (int r = 1; r <= depth; ++r) {
    const RationalPoly& Pr = st.Ps[static_cast<std::size_t>(r)];
    const RationalPoly& Qr = st.Qs[static_cast<std::size_t>(r)];
    ContactResidual cr{r, Pr.degree(), Qr.degree(), Real(0L, precision), 2 * r + 1};
    for (const Complex& alpha : roots) {
      RationalPoly dp = Pr, dq = Qr;
      for (int k = 0; k <= 2 * r; ++k) {
        Complex ap = alpha * dp(alpha);
        Complex q = dq(alpha);
        Real scale = max(Real(1L, precision), ap.abs() + q.abs());
        Real res = (ap - q).abs() / scale;
        cr.max_residual = max(cr.max_residual, res);
        if (res > tol) cr.order = std::min(cr.order, k);
        dp = dp.derivative();
        dq = dq.derivative();
      }
    }
    st.contact.push_back(cr);
  }
  return st;
}

}  // namespace quartic
