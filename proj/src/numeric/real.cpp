#include "etaq/numeric/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace etaq {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;
constexpr mpfr_prec_t kGuardBits = 16;

struct MpfrString {
  char* text = nullptr;
  ~MpfrString() {
    if (text != nullptr) mpfr_free_str(text);
  }
};

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one decimal digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + kGuardBits;
}

Real power_of_ten(long exponent, int digits) {
  Real r(10L, digits);
  mpfr_pow_si(r.get(), r.get(), exponent, MPFR_RNDN);
  return r;
}

Real::Real(int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, int digits) : Real(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(double value, int digits) : Real(digits) { mpfr_set_d(value_, value, MPFR_RNDN); }

Real::Real(const BigInt& value, int digits) : Real(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, int digits) : Real(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(const std::string& decimal, int digits) {
  Real r(digits);
  if (mpfr_set_str(r.value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
  return r;
}

Real Real::pi(int digits) {
  Real r(digits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

#define ETAQ_WIDEN(rhs)                                                  \
  do {                                                                   \
    if (mpfr_get_prec((rhs).value_) > mpfr_get_prec(value_)) {           \
      mpfr_prec_round(value_, mpfr_get_prec((rhs).value_), MPFR_RNDN);   \
    }                                                                    \
    digits_ = std::max(digits_, (rhs).digits_);                          \
  } while (false)

Real& Real::operator+=(const Real& rhs) {
  ETAQ_WIDEN(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  ETAQ_WIDEN(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  ETAQ_WIDEN(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  ETAQ_WIDEN(rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

#undef ETAQ_WIDEN

Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || std::isnan(b)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigInt Real::round() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("cannot round a non-finite value");
  Real r(*this);
  mpfr_round(r.value_, value_);
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), r.value_, MPFR_RNDN);
  return z;
}

std::string Real::to_fixed(int fraction_digits) const {
  MpfrString s;
  mpfr_asprintf(&s.text, "%.*Rf", fraction_digits, value_);
  return s.text;
}

std::string Real::to_scientific(int significant) const {
  MpfrString s;
  mpfr_asprintf(&s.text, "%.*Re", std::max(0, significant - 1), value_);
  return s.text;
}

namespace {

template <typename Fn>
Real apply_unary(const Real& x, Fn fn) {
  Real r(x.digits());
  mpfr_set_prec(r.get(), x.bits());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(Real x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real sqrt(const Real& x) { return apply_unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return apply_unary(x, mpfr_exp); }
Real log(const Real& x) { return apply_unary(x, mpfr_log); }
Real cos(const Real& x) { return apply_unary(x, mpfr_cos); }
Real sin(const Real& x) { return apply_unary(x, mpfr_sin); }
Real cosh(const Real& x) { return apply_unary(x, mpfr_cosh); }
Real sinh(const Real& x) { return apply_unary(x, mpfr_sinh); }

Real pow(const Real& base, const Real& exponent) {
  Real r(std::max(base.digits(), exponent.digits()));
  mpfr_set_prec(r.get(), std::max(base.bits(), exponent.bits()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Rational& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    Real r(base);
    mpfr_pow_si(r.get(), base.get(), exponent.get_num().get_si(), MPFR_RNDN);
    return r;
  }
  return pow(base, Real(exponent, base.digits()));
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.digits(), x.digits()));
  mpfr_set_prec(r.get(), std::max(y.bits(), x.bits()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

void sin_cos(const Real& x, Real& sine, Real& cosine) {
  if (sine.bits() != x.bits() || sine.digits() != x.digits()) sine = Real(x.digits());
  if (cosine.bits() != x.bits() || cosine.digits() != x.digits()) cosine = Real(x.digits());
  mpfr_set_prec(sine.get(), x.bits());
  mpfr_set_prec(cosine.get(), x.bits());
  mpfr_sin_cos(sine.get(), cosine.get(), x.get(), MPFR_RNDN);
}

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real real = re * rhs.re - im * rhs.im;
  Real imag = re * rhs.im + im * rhs.re;
  re = std::move(real);
  im = std::move(imag);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  const Real norm = rhs.re * rhs.re + rhs.im * rhs.im;
  Real real = (re * rhs.re + im * rhs.im) / norm;
  Real imag = (im * rhs.re - re * rhs.im) / norm;
  re = std::move(real);
  im = std::move(imag);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Real abs(const Complex& z) {
  Real r(z.digits());
  mpfr_set_prec(r.get(), std::max(z.re.bits(), z.im.bits()));
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Complex w = unit_phase(z.im);
  w *= exp(z.re);
  return w;
}

Complex sqrt(const Complex& z) {
  const int digits = z.digits();
  const Real r = abs(z);
  if (r.is_zero()) return Complex(digits);
  if (z.re.sign() >= 0) {
    Real real = sqrt((r + z.re) / 2L);
    Real imag = z.im / (real * 2L);
    return Complex(std::move(real), std::move(imag));
  }
  Real imag = sqrt((r - z.re) / 2L);
  if (z.im.sign() < 0) imag = -imag;
  Real real = z.im / (imag * 2L);
  return Complex(std::move(real), std::move(imag));
}

Complex unit_phase(const Real& theta) {
  Real s(theta.digits());
  Real c(theta.digits());
  sin_cos(theta, s, c);
  return Complex(std::move(c), std::move(s));
}

}  // namespace etaq
