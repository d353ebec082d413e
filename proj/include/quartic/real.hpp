#pragma once

// Arbitrary precision real and complex values backed by MPFR.
//
// Every value carries its own precision in bits. Binary operations produce a
// result at the larger of the two operand precisions, so precision flows from
// the inputs of a computation and never from global state.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace quartic {

using Int = mpz_class;
using Rat = mpq_class;

/// n / d in canonical form; d may be negative.
inline Rat make_rat(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

class Real {
 public:
  static constexpr long kDefaultBits = 128;

  explicit Real(long bits = kDefaultBits);
  Real(long value, long bits);
  Real(int value, long bits) : Real(static_cast<long>(value), bits) {}
  Real(double value, long bits);
  Real(const Int& value, long bits);
  Real(const Rat& value, long bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
/// Real k-th root; for odd k negative inputs are allowed.
Real root(const Real& a, unsigned long k);
Real pow(const Real& a, const Real& b);
Real pow(const Real& a, long n);
Real exp(const Real& a);
Real log(const Real& a);
Real cos(const Real& a);
Real sin(const Real& a);
Real atan2(const Real& y, const Real& x);
Real pi(long bits);
Real max(const Real& a, const Real& b);
/// 2^e at the given precision.
Real two_pow(long e, long bits);

struct Complex {
  Real re;
  Real im;

  explicit Complex(long bits = Real::kDefaultBits) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(r.precision()) {}

  long precision() const { return re.precision() > im.precision() ? re.precision() : im.precision(); }

  Complex conj() const { return Complex(re, -im); }
  Real norm() const { return re * re + im * im; }
  Real abs() const;
  Real arg() const { return atan2(im, re); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& s) { return Complex(a.re * s, a.im * s); }
  friend Complex operator/(const Complex& a, const Real& s) { return Complex(a.re / s, a.im / s); }
};

Complex pow(const Complex& z, unsigned long n);
Complex polar(const Real& r, const Real& theta);
/// Principal k-th root: argument in (-pi/k, pi/k].
Complex principal_root(const Complex& z, unsigned long k);
/// e^(i theta).
Complex exp_i(const Real& theta);

}  // namespace quartic
