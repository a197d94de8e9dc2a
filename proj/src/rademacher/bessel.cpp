#include "etaq/rademacher/bessel.hpp"

#include <stdexcept>

namespace etaq::rademacher {

namespace {

bool is_half_integer_multiple(const Rational& v) { return v.get_den() == 1 || v.get_den() == 2; }

}  // namespace

Real half_integer_gamma(const Rational& s, int digits) {
  if (!is_half_integer_multiple(s) || s <= 0) {
    throw std::domain_error("half_integer_gamma needs s in (1/2)Z, s > 0");
  }
  if (s.get_den() == 1) {
    BigInt factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(to_int64(s.get_num()) - 1));
    return Real(factorial, digits);
  }
  // Gamma(1/2 + j) = sqrt(pi) * prod_{i<j} (1/2 + i)
  Rational scale(1);
  for (Rational t(1, 2); t < s; t += 1) scale *= t;
  return Real(scale, digits) * sqrt(Real::pi(digits));
}

Real bessel_i(const Rational& nu, const Real& x, int digits) {
  if (!is_half_integer_multiple(nu) || nu < 0) {
    throw std::domain_error("bessel_i supports orders in (1/2)Z with nu >= 0");
  }
  if (x.sign() < 0) throw std::domain_error("bessel_i needs x >= 0");
  if (x.is_zero()) return Real(nu == 0 ? 1L : 0L, digits);

  const Real half_x = x / 2L;
  const Real quarter_x_squared = half_x * half_x;
  const Real order(nu, digits);
  const Real tolerance = power_of_ten(-(static_cast<long>(digits) + 5), digits);

  Real term = pow(half_x, nu) / half_integer_gamma(nu + 1, digits);
  Real sum = term;
  for (long j = 0;; ++j) {
    term *= quarter_x_squared;
    term /= (order + (j + 1)) * (j + 1);
    sum += term;
    if (term < tolerance * sum) break;
  }
  return sum;
}

}  // namespace etaq::rademacher
