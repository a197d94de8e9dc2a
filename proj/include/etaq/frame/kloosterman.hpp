#pragma once

#include <cstdint>
#include <vector>

#include "etaq/frame/frame_shape.hpp"
#include "etaq/numeric/rational.hpp"
#include "etaq/numeric/real.hpp"

namespace etaq::frame {

// A_k(n) evaluated as a complex sum. The sum is real; `imaginary` is the
// numerical residual and is kept for diagnostics.
struct KloostermanValue {
  Real real;
  Real imaginary;
};

// The n-independent part of A_k(n) for one k:
//
//   A_k(n) = sum_{0 <= h < k, gcd(h,k) = 1} exp(-2 pi i (h n / k + phase(h)))
//   phase(h) = (1/2) sum_m delta_m s(m h / gcd(m,k), k / gcd(m,k))
//
// Phases are stored exactly, reduced mod 1, so evaluation at any n reduces
// the full exponent exactly before a single sin/cos call per term.
class KloostermanPhases {
 public:
  KloostermanPhases(const FrameShape& shape, std::int64_t k);

  std::int64_t k() const noexcept { return k_; }
  const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
  // phase(residues()[i]) as an exact fraction in [0, 1).
  Rational phase(std::size_t i) const;

  // No realness check; see kloosterman_like_sum for the checked version.
  KloostermanValue evaluate(std::int64_t n, int digits) const;

 private:
  std::int64_t k_;
  std::vector<std::int64_t> residues_;
  // phase(residues_[i]) = numerators_[i] / denominator_, denominator_ = 24 k.
  std::int64_t denominator_;
  std::vector<std::int64_t> numerators_;
};

// 10^-(digits-10): the tolerance used for quantities that must vanish.
Real vanishing_tolerance(int digits);

// Checked A_k(n): throws PrecisionFault if |Im A_k(n)| exceeds
// vanishing_tolerance(digits).
KloostermanValue kloosterman_like_sum(const FrameShape& shape, std::int64_t k, std::int64_t n,
                                      int digits = kDefaultDigits);

// Throws PrecisionFault when the value's imaginary residual is too large.
void require_real(const KloostermanValue& value, std::int64_t k, std::int64_t n, int digits);

}  // namespace etaq::frame
