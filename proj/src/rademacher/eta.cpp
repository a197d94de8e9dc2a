#include "etaq/rademacher/eta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace etaq::rademacher {

namespace {

void require_upper_half_plane(const Complex& tau) {
  if (tau.im.sign() <= 0) throw std::domain_error("eta needs Im tau > 0");
}

// exp(2 pi i tau * scale)
Complex q_power(const Complex& tau, const Real& scale) {
  const Real two_pi = Real::pi(tau.digits()) * 2L;
  return exp(Complex(-tau.im * two_pi * scale, tau.re * two_pi * scale));
}

}  // namespace

std::int64_t eta_truncation(const Complex& tau, int digits) {
  require_upper_half_plane(tau);
  // |q|^T = exp(-2 pi T Im tau)
  const double im = tau.im.to_double();
  const double needed = (digits + 5) * std::numbers::ln10 / (2 * std::numbers::pi * im);
  return static_cast<std::int64_t>(std::floor(needed)) + 1;
}

Complex eta_numeric(const Complex& tau, int digits) { return eta_numeric(tau, digits, eta_truncation(tau, digits)); }

Complex eta_numeric(const Complex& tau, int digits, std::int64_t truncation) {
  require_upper_half_plane(tau);
  const Complex q = q_power(tau, Real(1L, digits));
  const Complex q3 = q * q * q;

  // j >= 1 contributes (-1)^j (q^{j(3j-1)/2} + q^{j(3j+1)/2}).
  Complex sum(Real(1L, digits), Real(digits));
  Complex lower = q;        // q^{j(3j-1)/2}, j = 1
  Complex step = q3 * q;    // q^{3j+1}: lower(j+1) = lower(j) * step
  Complex q_to_j = q;       // q^j: upper(j) = lower(j) * q^j
  for (std::int64_t j = 1; j * (3 * j - 1) / 2 <= truncation; ++j) {
    Complex pair = lower;
    if (j * (3 * j + 1) / 2 <= truncation) pair += lower * q_to_j;
    if (j % 2 == 0) {
      sum += pair;
    } else {
      sum -= pair;
    }
    lower *= step;
    step *= q3;
    q_to_j *= q;
  }
  return q_power(tau, Real(make_rational(1, 24), digits)) * sum;
}

Complex eta_product(const Complex& tau, int digits, std::int64_t truncation) {
  require_upper_half_plane(tau);
  const Complex q = q_power(tau, Real(1L, digits));
  const Complex one(Real(1L, digits), Real(digits));
  Complex product = one;
  Complex q_to_n = q;
  for (std::int64_t n = 1; n <= truncation; ++n) {
    product *= one - q_to_n;
    q_to_n *= q;
  }
  return q_power(tau, Real(make_rational(1, 24), digits)) * product;
}

Real transform_check(const frame::MatrixSL2& m, const Complex& tau, int digits) {
  require_upper_half_plane(tau);
  const auto scalar = [digits](std::int64_t v) { return Complex(Real(static_cast<long>(v), digits), Real(digits)); };
  const Complex denominator = scalar(m.c()) * tau + scalar(m.d());
  const Complex image = (scalar(m.a()) * tau + scalar(m.b())) / denominator;
  const Complex lhs = eta_numeric(image, digits);
  const Complex rhs = frame::multiplier_epsilon(m, digits) * sqrt(denominator) * eta_numeric(tau, digits);
  return abs(lhs - rhs);
}

}  // namespace etaq::rademacher
