#pragma once

#include <cstdint>
#include <vector>

#include "etaq/frame/frame_shape.hpp"
#include "etaq/numeric/rational.hpp"
#include "etaq/numeric/real.hpp"
#include "etaq/rademacher/series.hpp"

namespace etaq::rademacher {

inline constexpr double kDefaultFrontSumEpsilon = 1e-6;

// Leading-order growth of d(n). With K the set of k maximizing c3(k)/k^2
// (always inside 1..lcm(M)) and c3max that maximum,
//
//   d(n) ~ 2 pi (c3max / (24 (n - n0)))^{(c1+1)/2}
//          * I_{1+c1}(pi sqrt((2/3) c3max (n - n0)))
//          * sum_{k in K} c2(k) k^{c1} A_k(n)
//
// with relative error O(exp(-C sqrt(n))), provided the trailing sum (the
// front sum) stays away from zero.
struct AsymptoticData {
  std::vector<std::int64_t> leading_set;
  Rational c3_max;
  Real estimate;
  Real front_sum;
  // |front_sum| < epsilon: the estimate is returned but carries no
  // guarantee (e.g. d(n) = 0 for odd n of 1/eta(2 tau)).
  bool degenerate = false;
};

// Throws HypothesisError as RademacherSeries does, and std::domain_error
// for n <= n0 or when no k has c3(k) > 0.
AsymptoticData asymptotic_estimate(const frame::FrameShape& shape, std::int64_t n,
                                   const EvaluationOptions& options = {},
                                   double epsilon = kDefaultFrontSumEpsilon);

}  // namespace etaq::rademacher
