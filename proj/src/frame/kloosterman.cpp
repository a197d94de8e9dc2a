#include "etaq/frame/kloosterman.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "etaq/error.hpp"
#include "etaq/frame/dedekind.hpp"

namespace etaq::frame {

KloostermanPhases::KloostermanPhases(const FrameShape& shape, std::int64_t k)
    : k_(k), denominator_(24 * k) {
  if (k < 1) throw std::domain_error("Kloosterman-like sum needs k >= 1");
  // With k_m = k / gcd(m, k), s(m h / gcd, k_m) = S_m / (12 k_m) for the
  // integer S_m = scaled_dedekind_sum, so
  //   phase(h) = (1/2) sum_m delta_m S_m / (12 k_m) = sum_m delta_m gcd(m, k) S_m / (24 k).
  // gcd(0, 1) = 1, so h = 0 enters only for k = 1.
  for (std::int64_t h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    __int128 numerator = 0;
    for (const auto& [m, e] : shape.entries()) {
      const std::int64_t g = std::gcd(m, k);
      const std::int64_t modulus = k / g;
      const std::int64_t argument = static_cast<std::int64_t>((static_cast<__int128>(m / g) * h) % modulus);
      numerator += static_cast<__int128>(e) * g * scaled_dedekind_sum(argument, modulus);
    }
    numerator %= denominator_;
    if (numerator < 0) numerator += denominator_;
    residues_.push_back(h);
    numerators_.push_back(static_cast<std::int64_t>(numerator));
  }
}

Rational KloostermanPhases::phase(std::size_t i) const {
  return make_rational(to_bigint(numerators_.at(i)), to_bigint(denominator_));
}

KloostermanValue KloostermanPhases::evaluate(std::int64_t n, int digits) const {
  const Real unit = Real::pi(digits) * 2L / static_cast<long>(denominator_);
  KloostermanValue out{Real(digits), Real(digits)};
  Real sine(digits);
  Real cosine(digits);
  Real angle(digits);
  const __int128 n_mod_k = ((n % k_) + k_) % k_;
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    // Exponent h n / k + phase(h) = numerator / denominator_, reduced mod 1.
    const __int128 numerator =
        (static_cast<__int128>(residues_[i]) * n_mod_k % k_ * 24 + numerators_[i]) % denominator_;
    mpfr_mul_si(angle.get(), unit.get(), static_cast<long>(numerator), MPFR_RNDN);
    sin_cos(angle, sine, cosine);
    // exp(-i angle) = cos(angle) - i sin(angle)
    out.real += cosine;
    out.imaginary -= sine;
  }
  return out;
}

Real vanishing_tolerance(int digits) { return power_of_ten(-(static_cast<long>(digits) - 10), digits); }

void require_real(const KloostermanValue& value, std::int64_t k, std::int64_t n, int digits) {
  if (abs(value.imaginary) > vanishing_tolerance(digits)) {
    throw PrecisionFault("A_" + std::to_string(k) + "(" + std::to_string(n) +
                         ") has imaginary residual " + value.imaginary.to_scientific(6));
  }
}

KloostermanValue kloosterman_like_sum(const FrameShape& shape, std::int64_t k, std::int64_t n, int digits) {
  KloostermanValue value = KloostermanPhases(shape, k).evaluate(n, digits);
  require_real(value, k, n, digits);
  return value;
}

}  // namespace etaq::frame
