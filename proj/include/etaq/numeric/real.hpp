#pragma once

#include <compare>
#include <string>
#include <utility>

#include <mpfr.h>

#include "etaq/numeric/rational.hpp"

namespace etaq {

inline constexpr int kDefaultDigits = 50;

// Mantissa bits used for a working precision of `digits` decimal digits:
// ceil(digits * log2(10)) plus a fixed guard.
mpfr_prec_t bits_for_digits(int digits);

class Real;
// 10^exponent at the given precision.
Real power_of_ten(long exponent, int digits);

// Real number at a fixed working precision of P decimal digits, backed by an
// MPFR value. Every value carries its own precision; binary operations
// produce a result at the larger of the two operand precisions, so precision
// never drops inside a computation. Values are independent (no shared state)
// and safe to use from multiple threads.
class Real {
 public:
  explicit Real(int digits = kDefaultDigits);
  Real(int value, int digits) : Real(static_cast<long>(value), digits) {}
  Real(long value, int digits);
  Real(double value, int digits);
  Real(const BigInt& value, int digits);
  Real(const Rational& value, int digits);
  static Real parse(const std::string& decimal, int digits);
  static Real pi(int digits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator+(Real lhs, long rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, long rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, double b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

  // Nearest integer (ties away from zero).
  BigInt round() const;

  // Fixed-point decimal with `fraction_digits` digits after the point.
  std::string to_fixed(int fraction_digits) const;
  // Scientific notation with `significant` significant digits.
  std::string to_scientific(int significant) const;

 private:
  mpfr_t value_;
  int digits_;
};

Real abs(Real x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real cosh(const Real& x);
Real sinh(const Real& x);
Real pow(const Real& base, const Real& exponent);
// base^(exponent) for an exact rational exponent.
Real pow(const Real& base, const Rational& exponent);
Real atan2(const Real& y, const Real& x);
Real max(const Real& a, const Real& b);
void sin_cos(const Real& x, Real& sine, Real& cosine);

// Complex number as a pair of Reals at the same precision.
struct Complex {
  Real re;
  Real im;

  explicit Complex(int digits = kDefaultDigits) : re(digits), im(digits) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}

  int digits() const noexcept { return re.digits() > im.digits() ? re.digits() : im.digits(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
// Principal branch: argument of the result in (-pi/2, pi/2].
Complex sqrt(const Complex& z);
// exp(i * theta)
Complex unit_phase(const Real& theta);

}  // namespace etaq
