#include "quartic/poly.hpp"

#include <algorithm>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic {

RationalPoly::RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::constant(const Rat& c) { return RationalPoly(std::vector<Rat>{c}); }

RationalPoly RationalPoly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int RationalPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::pow(unsigned n) const {
  RationalPoly result = constant(1), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

RationalPoly RationalPoly::divide_by_power(std::size_t k) const {
  for (std::size_t i = 0; i < k && i < c_.size(); ++i)
    if (c_[i] != 0) throw Inconsistency("polynomial is not divisible by z^" + std::to_string(k));
  if (c_.size() <= k) return {};
  return RationalPoly(std::vector<Rat>(c_.begin() + static_cast<long>(k), c_.end()));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  Rat inv = 1 / leading();
  return *this * inv;
}

RationalPoly RationalPoly::primitive() const {
  if (is_zero()) return {};
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& c : c_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  return *this * make_rat(den_lcm, num_gcd);
}

bool RationalPoly::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c.get_den() == 1; });
}

Rat RationalPoly::operator()(const Rat& z) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex RationalPoly::operator()(const Complex& z) const {
  long bits = z.precision();
  Complex acc(bits);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc.re += Real(*it, bits);
  }
  return acc;
}

Real RationalPoly::operator()(const Real& z) const {
  long bits = z.precision();
  Real acc(0L, bits);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + Real(*it, bits);
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(r));
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rat mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (k == 0 || mag != 1) out << mag.get_str() << (k ? "*" : "");
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> rem = a.coefficients();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {RationalPoly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(dq + 1), Rat(0));
  Rat lead = b.leading();
  for (int k = dq; k >= 0; --k) {
    Rat t = rem[static_cast<std::size_t>(k + db)] / lead;
    q[static_cast<std::size_t>(k)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= t * b.coeff(static_cast<std::size_t>(j));
  }
  return {RationalPoly(std::move(q)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b;
  while (!y.is_zero()) {
    RationalPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p;
  RationalPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

// ---- BinaryForm ----

BinaryForm::BinaryForm(int degree, std::vector<Int> coeffs) : d_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree + 1))
    throw InvalidInput("binary form of degree " + std::to_string(degree) + " needs " +
                       std::to_string(degree + 1) + " coefficients");
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(degree, std::vector<Int>(static_cast<std::size_t>(degree + 1), Int(0)));
}

BinaryForm BinaryForm::homogenize(const RationalPoly& p, int n) {
  if (!p.has_integer_coefficients()) throw InvalidInput("homogenize needs integer coefficients");
  if (p.degree() > n) throw InvalidInput("homogenize degree below polynomial degree");
  BinaryForm f = zero(n);
  for (int k = 0; k <= p.degree(); ++k) f.c_[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k)).get_num();
  return f;
}

BinaryForm BinaryForm::from_terms(int degree, const std::vector<std::pair<int, long>>& y_power_coeffs) {
  BinaryForm f = zero(degree);
  for (const auto& [k, c] : y_power_coeffs) {
    if (k < 0 || k > degree) throw InvalidInput("monomial outside form degree");
    f.c_[static_cast<std::size_t>(k)] += c;
  }
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& c) { return c == 0; });
}

BinaryForm BinaryForm::partial_x() const {
  if (d_ == 0) return zero(0);
  BinaryForm r = zero(d_ - 1);
  for (int k = 0; k < d_; ++k) r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * (d_ - k);
  return r;
}

BinaryForm BinaryForm::partial_y() const {
  if (d_ == 0) return zero(0);
  BinaryForm r = zero(d_ - 1);
  for (int k = 1; k <= d_; ++k) r.c_[static_cast<std::size_t>(k - 1)] = c_[static_cast<std::size_t>(k)] * k;
  return r;
}

Int BinaryForm::operator()(const Int& x, const Int& y) const {
  // Homogeneous Horner: sum c_k x^(d-k) y^k.
  Int acc = 0, ypow = 1;
  std::vector<Int> xpow(static_cast<std::size_t>(d_ + 1));
  xpow[0] = 1;
  for (int k = 1; k <= d_; ++k) xpow[static_cast<std::size_t>(k)] = xpow[static_cast<std::size_t>(k - 1)] * x;
  for (int k = 0; k <= d_; ++k) {
    acc += c_[static_cast<std::size_t>(k)] * xpow[static_cast<std::size_t>(d_ - k)] * ypow;
    ypow *= y;
  }
  return acc;
}

Complex BinaryForm::operator()(const Complex& x, const Complex& y) const {
  long bits = std::max(x.precision(), y.precision());
  std::vector<Complex> xpow, ypow;
  xpow.emplace_back(Real(1L, bits));
  ypow.emplace_back(Real(1L, bits));
  for (int k = 1; k <= d_; ++k) {
    xpow.push_back(xpow.back() * x);
    ypow.push_back(ypow.back() * y);
  }
  Complex acc(bits);
  for (int k = 0; k <= d_; ++k)
    acc += xpow[static_cast<std::size_t>(d_ - k)] * ypow[static_cast<std::size_t>(k)] *
           Real(c_[static_cast<std::size_t>(k)], bits);
  return acc;
}

BinaryForm BinaryForm::substitute(const Int& m, const Int& l, const Int& p, const Int& q) const {
  // Expand sum c_k (mX + lY)^(d-k) (pX + qY)^k.
  BinaryForm result = zero(d_);
  BinaryForm lx(1, {m, l}), ly(1, {p, q});
  std::vector<BinaryForm> lxp{BinaryForm(0, {Int(1)})}, lyp{BinaryForm(0, {Int(1)})};
  for (int k = 1; k <= d_; ++k) {
    lxp.push_back(lxp.back() * lx);
    lyp.push_back(lyp.back() * ly);
  }
  for (int k = 0; k <= d_; ++k) {
    if (c_[static_cast<std::size_t>(k)] == 0) continue;
    result = result + lxp[static_cast<std::size_t>(d_ - k)] * lyp[static_cast<std::size_t>(k)] * c_[static_cast<std::size_t>(k)];
  }
  return result;
}

BinaryForm& BinaryForm::operator*=(const Int& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.d_ != b.d_) throw InvalidInput("adding binary forms of different degree");
  BinaryForm r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
  return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  if (a.d_ != b.d_) throw InvalidInput("subtracting binary forms of different degree");
  BinaryForm r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
  return r;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r = BinaryForm::zero(a.d_ + b.d_);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  return r;
}

std::string BinaryForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= d_; ++k) {
    const Int& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Int mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    int xp = d_ - k;
    bool bare = (xp == 0 && k == 0);
    if (bare || mag != 1) out << mag.get_str() << (bare ? "" : "*");
    if (xp >= 1) out << "x" << (xp > 1 ? "^" + std::to_string(xp) : "");
    if (xp >= 1 && k >= 1) out << "*";
    if (k >= 1) out << "y" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return first ? "0" : out.str();
}

// ---- real and complex roots ----

namespace {

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  std::vector<RationalPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RationalPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(r * Rat(-1));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<Rat>& values) {
  int changes = 0, last = 0;
  for (const auto& v : values) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<RationalPoly>& seq, const Rat& x) {
  std::vector<Rat> v;
  for (const auto& s : seq) v.push_back(s(x));
  return sign_changes(v);
}

int variations_at_infinity(const std::vector<RationalPoly>& seq, bool positive) {
  std::vector<Rat> v;
  for (const auto& s : seq) {
    Rat lead = s.leading();
    if (!positive && s.degree() % 2 == 1) lead = -lead;
    v.push_back(lead);
  }
  return sign_changes(v);
}

// 1 + max |a_i / a_n|, an upper bound on the modulus of every root.
Rat cauchy_bound(const RationalPoly& p) {
  Rat m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rat(abs(p.coeff(static_cast<std::size_t>(k)) / p.leading())));
  return m + 1;
}

}  // namespace

int count_real_roots(const RationalPoly& p) {
  if (p.degree() <= 0) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

std::vector<Rat> real_roots(const RationalPoly& p, long bits) {
  std::vector<Rat> roots;
  if (p.degree() <= 0) return roots;
  RationalPoly sf = squarefree_part(p);
  auto seq = sturm_sequence(sf);
  Rat width_target(1);
  width_target /= Int(1) << static_cast<unsigned long>(std::max(1L, bits));
  Rat bound = cauchy_bound(sf);

  struct Interval {
    Rat lo, hi;
    int vlo, vhi;
  };
  // Sturm counts distinct roots in (lo, hi]; bound is never a root by construction.
  std::vector<Interval> stack{{-bound, bound, variations_at(seq, -bound), variations_at(seq, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    int count = iv.vlo - iv.vhi;
    if (count == 0) continue;
    if (count == 1) {
      Rat lo = iv.lo, hi = iv.hi;
      int vlo = iv.vlo;
      while (hi - lo > width_target) {
        Rat mid = (lo + hi) / 2;
        if (sf(mid) == 0) {
          lo = hi = mid;
          break;
        }
        int vmid = variations_at(seq, mid);
        if (vlo - vmid == 1) {
          hi = mid;
        } else {
          lo = mid;
          vlo = vmid;
        }
      }
      roots.push_back(sf(hi) == 0 ? hi : (lo + hi) / 2);
      continue;
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    int vmid = variations_at(seq, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Complex> complex_roots(const RationalPoly& p, long bits) {
  int n = p.degree();
  if (n <= 0) return {};
  long work = bits + 32;
  RationalPoly mp = p.monic();
  RationalPoly dp = mp.derivative();
  Real radius(cauchy_bound(mp), work);

  // Durand-Kerner from points on a circle with an irrational-ish phase offset.
  std::vector<Complex> z;
  Real two_pi = pi(work) * 2L;
  for (int k = 0; k < n; ++k) {
    Real theta = two_pi * Real(k, work) / Real(n, work) + Real(0.4, work);
    z.push_back(polar(radius, theta));
  }
  Real tol = two_pow(-(bits + 8), work);
  for (int iter = 0; iter < 2000; ++iter) {
    Real max_step(0L, work);
    for (int i = 0; i < n; ++i) {
      Complex denom(Real(1L, work), Real(0L, work));
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      Complex step = mp(z[static_cast<std::size_t>(i)]) / denom;
      z[static_cast<std::size_t>(i)] -= step;
      max_step = max(max_step, step.abs() / max(Real(1L, work), z[static_cast<std::size_t>(i)].abs()));
    }
    if (max_step < tol) break;
  }
  // Newton polish.
  for (auto& r : z) {
    for (int k = 0; k < 4; ++k) {
      Complex d = dp(r);
      if (d.abs().is_zero()) break;
      r -= mp(r) / d;
    }
  }
  return z;
}

}  // namespace quartic
