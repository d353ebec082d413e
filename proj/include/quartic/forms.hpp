#pragma once

#include <array>
#include <string>

#include "quartic/poly.hpp"
#include "quartic/real.hpp"

namespace quartic {

/// a0 x^4 + a1 x^3 y + a2 x^2 y^2 + a3 x y^3 + a4 y^4.
struct QuarticForm {
  std::array<Int, 5> a{};

  QuarticForm() = default;
  QuarticForm(Int a0, Int a1, Int a2, Int a3, Int a4) : a{a0, a1, a2, a3, a4} {}
  QuarticForm(long a0, long a1, long a2, long a3, long a4) : a{a0, a1, a2, a3, a4} {}

  /// Parses "[a0,a1,a2,a3,a4]"; whitespace is ignored and the brackets are optional.
  static QuarticForm parse(const std::string& text);
  std::string to_string() const;

  bool is_zero() const;
  Int operator()(const Int& x, const Int& y) const;
  Complex operator()(const Complex& x, const Complex& y) const;
  BinaryForm as_binary() const { return BinaryForm(4, {a[0], a[1], a[2], a[3], a[4]}); }
  /// F(x, 1).
  RationalPoly dehomogenized() const;
  QuarticForm negated() const { return {-a[0], -a[1], -a[2], -a[3], -a[4]}; }

  friend bool operator==(const QuarticForm& f, const QuarticForm& g) { return f.a == g.a; }
  friend bool operator!=(const QuarticForm& f, const QuarticForm& g) { return !(f == g); }
  friend bool operator<(const QuarticForm& f, const QuarticForm& g) { return f.a < g.a; }
};

struct InvariantTriple {
  Int I, J;
  Rat D;
};

struct HessianCoefficients {
  std::array<Int, 5> A{};

  BinaryForm as_binary() const { return BinaryForm(4, {A[0], A[1], A[2], A[3], A[4]}); }
  /// The Hessian viewed as a quartic form, for computing its own invariants.
  QuarticForm as_form() const { return {A[0], A[1], A[2], A[3], A[4]}; }
  friend bool operator==(const HessianCoefficients& x, const HessianCoefficients& y) { return x.A == y.A; }
};

/// (x, y) -> (m x + l y, p x + q y).
struct UnimodularMap {
  Int m = 1, l = 0, p = 0, q = 1;

  static UnimodularMap identity() { return {}; }
  Int det() const { return m * q - l * p; }
  bool is_unimodular() const;
  /// Throws unless det = +-1. Only for det = +-1 maps.
  UnimodularMap inverse() const;
  std::string to_string() const;

  friend UnimodularMap operator*(const UnimodularMap& x, const UnimodularMap& y);
  friend bool operator==(const UnimodularMap& x, const UnimodularMap& y) {
    return x.m == y.m && x.l == y.l && x.p == y.p && x.q == y.q;
  }
};

Int invariant_I(const QuarticForm& f);
Int invariant_J(const QuarticForm& f);
/// Discriminant via Res(f, f') / a0, cross-checked against (4I^3 - J^2)/27.
InvariantTriple invariants(const QuarticForm& f);
/// The same discriminant computed only from the resultant.
Rat resultant_discriminant(const QuarticForm& f);

HessianCoefficients hessian(const QuarticForm& f);
/// Q = F_x H_y - F_y H_x as a degree-6 form.
BinaryForm sextic_covariant(const QuarticForm& f);
/// -10 a4 A0 + 2 a3 A1 - a2 A2 + a1 A3 - 2 a0 A4.
Int six_j_identity(const QuarticForm& f);

/// Substitutes (x, y) -> (m x + l y, p x + q y). Composition: apply(apply(F, M1), M2) = apply(F, M1 * M2).
QuarticForm apply_unimodular(const QuarticForm& f, const UnimodularMap& m);

bool is_irreducible(const QuarticForm& f);
/// Distinct real roots of F(x, 1) plus one for a root at infinity when a0 = 0.
int real_root_count(const QuarticForm& f);

/// Exact determinant of a square integer matrix by fraction-free elimination.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

}  // namespace quartic
