#include "quartic/forms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quartic/errors.hpp"

namespace quartic {

QuarticForm QuarticForm::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InvalidInput("unbalanced brackets in form literal '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  QuarticForm f;
  std::size_t idx = 0, start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (idx >= 5) throw InvalidInput("form literal '" + text + "' has more than five coefficients");
    if (tok.empty() || tok.find_first_not_of("+-0123456789") != std::string::npos)
      throw InvalidInput("bad coefficient '" + tok + "' in form literal '" + text + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    if (f.a[idx].set_str(tok, 10) != 0) throw InvalidInput("bad coefficient '" + tok + "' in form literal '" + text + "'");
    ++idx;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (idx != 5) throw InvalidInput("form literal '" + text + "' needs five coefficients");
  return f;
}

std::string QuarticForm::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < 5; ++i) out << (i ? "," : "") << a[static_cast<std::size_t>(i)].get_str();
  out << "]";
  return out.str();
}

bool QuarticForm::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
}

Int QuarticForm::operator()(const Int& x, const Int& y) const {
  Int x2 = x * x, y2 = y * y;
  return a[0] * x2 * x2 + a[1] * x2 * x * y + a[2] * x2 * y2 + a[3] * x * y2 * y + a[4] * y2 * y2;
}

Complex QuarticForm::operator()(const Complex& x, const Complex& y) const { return as_binary()(x, y); }

RationalPoly QuarticForm::dehomogenized() const {
  return RationalPoly(std::vector<Rat>{Rat(a[4]), Rat(a[3]), Rat(a[2]), Rat(a[1]), Rat(a[0])});
}

bool UnimodularMap::is_unimodular() const {
  Int d = det();
  return d == 1 || d == -1;
}

UnimodularMap UnimodularMap::inverse() const {
  Int d = det();
  if (d != 1 && d != -1) throw InvalidInput("map " + to_string() + " is not unimodular");
  // d = 1/d for d = +-1.
  return {q * d, -l * d, -p * d, m * d};
}

std::string UnimodularMap::to_string() const {
  return "[[" + m.get_str() + "," + l.get_str() + "],[" + p.get_str() + "," + q.get_str() + "]]";
}

UnimodularMap operator*(const UnimodularMap& x, const UnimodularMap& y) {
  return {x.m * y.m + x.l * y.p, x.m * y.l + x.l * y.q, x.p * y.m + x.q * y.p, x.p * y.l + x.q * y.q};
}

Int invariant_I(const QuarticForm& f) {
  const auto& a = f.a;
  return a[2] * a[2] - 3 * a[1] * a[3] + 12 * a[0] * a[4];
}

Int invariant_J(const QuarticForm& f) {
  const auto& a = f.a;
  return 2 * a[2] * a[2] * a[2] - 9 * a[1] * a[2] * a[3] + 27 * a[1] * a[1] * a[4] - 72 * a[0] * a[2] * a[4] +
         27 * a[0] * a[3] * a[3];
}

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Sylvester resultant of two integer polynomials given highest coefficient first.
Int sylvester_resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
  std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  std::vector<std::vector<Int>> s(n, std::vector<Int>(n, Int(0)));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) s[r][r + k] = f[k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) s[dg + r][r + k] = g[k];
  return bareiss_determinant(std::move(s));
}

}  // namespace

Rat resultant_discriminant(const QuarticForm& f) {
  if (f.is_zero()) throw InvalidInput("discriminant of the zero form");
  QuarticForm g = f;
  // The discriminant is SL2 invariant, so shear until the x^4 coefficient is nonzero.
  for (long t = 0; g.a[0] == 0; ++t) {
    if (t > 4) throw Inconsistency("no shear makes the leading coefficient nonzero");
    g = apply_unimodular(f, {1, 0, t, 1});
  }
  const auto& a = g.a;
  std::vector<Int> p{a[0], a[1], a[2], a[3], a[4]};
  std::vector<Int> dp{4 * a[0], 3 * a[1], 2 * a[2], a[3]};
  // Disc = (-1)^(n(n-1)/2) Res(f, f') / a0 with n = 4.
  return make_rat(sylvester_resultant(p, dp), a[0]);
}

InvariantTriple invariants(const QuarticForm& f) {
  if (f.is_zero()) throw InvalidInput("invariants of the zero form");
  InvariantTriple t{invariant_I(f), invariant_J(f), resultant_discriminant(f)};
  Rat from_ij = make_rat(4 * t.I * t.I * t.I - t.J * t.J, 27);
  if (from_ij != t.D)
    throw Inconsistency("discriminant mismatch for " + f.to_string() + ": resultant " + t.D.get_str() +
                        " vs invariants " + from_ij.get_str());
  return t;
}

HessianCoefficients hessian(const QuarticForm& f) {
  const auto& a = f.a;
  HessianCoefficients h;
  h.A[0] = 3 * (8 * a[0] * a[2] - 3 * a[1] * a[1]);
  h.A[1] = 12 * (6 * a[0] * a[3] - a[1] * a[2]);
  h.A[2] = 6 * (3 * a[1] * a[3] + 24 * a[0] * a[4] - 2 * a[2] * a[2]);
  h.A[3] = 12 * (6 * a[1] * a[4] - a[2] * a[3]);
  h.A[4] = 3 * (8 * a[2] * a[4] - 3 * a[3] * a[3]);
  return h;
}

BinaryForm sextic_covariant(const QuarticForm& f) {
  BinaryForm F = f.as_binary(), H = hessian(f).as_binary();
  return F.partial_x() * H.partial_y() - F.partial_y() * H.partial_x();
}

Int six_j_identity(const QuarticForm& f) {
  const auto& a = f.a;
  auto A = hessian(f).A;
  return -10 * a[4] * A[0] + 2 * a[3] * A[1] - a[2] * A[2] + a[1] * A[3] - 2 * a[0] * A[4];
}

QuarticForm apply_unimodular(const QuarticForm& f, const UnimodularMap& m) {
  if (!m.is_unimodular()) throw InvalidInput("map " + m.to_string() + " is not unimodular");
  BinaryForm g = f.as_binary().substitute(m.m, m.l, m.p, m.q);
  const auto& c = g.coefficients();
  return {c[0], c[1], c[2], c[3], c[4]};
}

namespace {

std::vector<Int> divisors(const Int& n) {
  // Positive divisors of |n| by trial division; coefficients here are small.
  std::vector<Int> out;
  Int m = abs(n);
  if (m == 0) return out;
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_rational_root(const std::array<Int, 5>& a) {
  // Roots p/q of a0 x^4 + ... + a4 with p | a4 and q | a0.
  if (a[4] == 0) return true;
  for (const Int& p : divisors(a[4]))
    for (const Int& q : divisors(a[0]))
      for (int s : {1, -1}) {
        Int pp = p * s;
        // q^4 F(p/q) = a0 p^4 + a1 p^3 q + a2 p^2 q^2 + a3 p q^3 + a4 q^4
        QuarticForm f(a[0], a[1], a[2], a[3], a[4]);
        if (f(pp, q) == 0) return true;
      }
  return false;
}

bool has_quadratic_factor(const std::array<Int, 5>& a) {
  // (b0 x^2 + b1 x + b2)(c0 x^2 + c1 x + c2) with b0 > 0, b0 | a0, b2 | a4.
  Rat bound = 0;
  for (int k = 1; k <= 4; ++k) bound = std::max(bound, make_rat(abs(a[static_cast<std::size_t>(k)]), abs(a[0])));
  bound += 1;  // root modulus bound
  for (const Int& b0 : divisors(a[0])) {
    Int c0 = a[0] / b0;
    for (const Int& b2mag : divisors(a[4])) {
      for (int s : {1, -1}) {
        Int b2 = b2mag * s;
        Int c2 = a[4] / b2;
        Int det = c0 * b2 - b0 * c2;
        auto check = [&](const Int& b1, const Int& c1) {
          return b0 * c1 + b1 * c0 == a[1] && b0 * c2 + b1 * c1 + b2 * c0 == a[2] && b1 * c2 + b2 * c1 == a[3];
        };
        if (det != 0) {
          // c0 b1 + b0 c1 = a1, c2 b1 + b2 c1 = a3.
          Int nb1 = a[1] * b2 - b0 * a[3];
          Int nc1 = c0 * a[3] - c2 * a[1];
          if (nb1 % det != 0 || nc1 % det != 0) continue;
          if (check(nb1 / det, nc1 / det)) return true;
        } else {
          // b1 / b0 is minus a sum of two roots, so |b1| <= 2 b0 bound.
          Rat lim = 2 * bound * b0;
          Int top = lim.get_num() / lim.get_den() + 1;
          for (Int b1 = -top; b1 <= top; ++b1) {
            Int rest = a[1] - b1 * c0;
            if (rest % b0 != 0) continue;
            if (check(b1, rest / b0)) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

bool is_irreducible(const QuarticForm& f) {
  if (f.a[0] == 0) return false;
  std::array<Int, 5> a = f.a;
  Int content = 0;
  for (const auto& c : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : a) c /= content;
  if (a[0] < 0)
    for (auto& c : a) c = -c;
  return !has_rational_root(a) && !has_quadratic_factor(a);
}

int real_root_count(const QuarticForm& f) {
  if (f.is_zero()) throw InvalidInput("real roots of the zero form");
  if (resultant_discriminant(f) == 0) throw DegenerateForm("form " + f.to_string() + " has a repeated root");
  return count_real_roots(f.dehomogenized()) + (f.a[0] == 0 ? 1 : 0);
}

}  // namespace quartic
