#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quartic/real.hpp"

namespace quartic {

/// Dense univariate polynomial over Q, lowest degree first, trailing zeros trimmed.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rat> coeffs);
  RationalPoly(std::initializer_list<long> coeffs);

  static RationalPoly constant(const Rat& c);
  static RationalPoly monomial(const Rat& c, std::size_t k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coefficients() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;

  RationalPoly derivative() const;
  RationalPoly pow(unsigned n) const;
  /// Exact quotient by z^k. Throws Inconsistency if a lower coefficient is nonzero.
  RationalPoly divide_by_power(std::size_t k) const;
  RationalPoly monic() const;
  /// Multiply by the least positive rational making the coefficients coprime integers.
  RationalPoly primitive() const;
  bool has_integer_coefficients() const;

  Rat operator()(const Rat& z) const;
  Complex operator()(const Complex& z) const;
  Real operator()(const Real& z) const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const Rat& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const Rat& s) { return a *= s; }
  friend RationalPoly operator*(const Rat& s, RationalPoly a) { return a *= s; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder of a / b.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
/// Monic gcd; zero if both inputs are zero.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
RationalPoly squarefree_part(const RationalPoly& p);

/// Homogeneous integer binary form sum c[k] x^(d-k) y^k.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Int> coeffs);

  static BinaryForm zero(int degree);
  /// P*(x, y) = x^n P(y/x) for an integer-coefficient P and n >= deg P.
  static BinaryForm homogenize(const RationalPoly& p, int n);
  /// Build from (power of y, coefficient) pairs; unlisted monomials are zero.
  static BinaryForm from_terms(int degree, const std::vector<std::pair<int, long>>& y_power_coeffs);

  int degree() const { return d_; }
  const std::vector<Int>& coefficients() const { return c_; }
  const Int& coeff(int y_power) const { return c_[static_cast<std::size_t>(y_power)]; }
  bool is_zero() const;

  BinaryForm partial_x() const;
  BinaryForm partial_y() const;
  Int operator()(const Int& x, const Int& y) const;
  Complex operator()(const Complex& x, const Complex& y) const;
  /// (x, y) -> (m X + l Y, p X + q Y).
  BinaryForm substitute(const Int& m, const Int& l, const Int& p, const Int& q) const;

  BinaryForm& operator*=(const Int& s);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(BinaryForm a, const Int& s) { return a *= s; }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

  /// Nonzero monomials, e.g. "-10*y^3".
  std::string to_string() const;

 private:
  int d_ = 0;
  std::vector<Int> c_{Int(0)};
};

/// Number of distinct real roots of p, by Sturm's theorem.
int count_real_roots(const RationalPoly& p);
/// Distinct real roots of p, each returned as a rational within 2^-bits of the root.
std::vector<Rat> real_roots(const RationalPoly& p, long bits);
/// All complex roots of a squarefree p at the given precision.
std::vector<Complex> complex_roots(const RationalPoly& p, long bits);

}  // namespace quartic
