#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "etaq/frame/frame_shape.hpp"

namespace etaq::testing {

// p(0..n_max) by Euler's pentagonal recurrence
//   p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<mpz_class> partitions_by_recurrence(std::int64_t n_max) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    mpz_class total = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      mpz_class part = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) part += p[static_cast<std::size_t>(n - g2)];
      if (k % 2 == 1) {
        total += part;
      } else {
        total -= part;
      }
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

// The six eta-quotients of the numerical experiments.
inline std::vector<frame::FrameShape> experiment_shapes() {
  return {
      frame::FrameShape(frame::FrameShape::Entries{{1, -3}, {4, -1}}), frame::FrameShape(frame::FrameShape::Entries{{1, -3}, {4, 1}}),
      frame::FrameShape(frame::FrameShape::Entries{{2, -1}}),          frame::FrameShape(frame::FrameShape::Entries{{1, -2}, {11, -2}}),
      frame::FrameShape(frame::FrameShape::Entries{{1, -1}, {22, -1}}), frame::FrameShape(frame::FrameShape::Entries{{1, -1}, {23, -1}}),
  };
}

// The first three converge visibly within 100 terms.
inline constexpr std::size_t kFastShapes = 3;

}  // namespace etaq::testing
