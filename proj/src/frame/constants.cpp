#include "etaq/frame/constants.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace etaq::frame {

std::size_t DerivedConstants::residue(std::int64_t k) const {
  if (k < 1) throw std::domain_error("k must be >= 1");
  return static_cast<std::size_t>((k - 1) % period);
}

DerivedConstants derive_constants(const FrameShape& shape) {
  DerivedConstants out;
  BigInt weighted_sum = 0;
  BigInt exponent_sum = 0;
  for (const auto& [m, e] : shape.entries()) {
    weighted_sum += to_bigint(m) * to_bigint(e);
    exponent_sum += to_bigint(e);
  }
  out.n0 = make_rational(-weighted_sum, 24);
  out.c1 = make_rational(-exponent_sum, 2);
  out.period = shape.period();

  const auto count = static_cast<std::size_t>(out.period);
  out.c2_squared.reserve(count);
  out.c3.reserve(count);
  out.g.reserve(count);
  for (std::int64_t k = 1; k <= out.period; ++k) {
    Rational c2_squared(1);
    Rational c3(0);
    std::optional<Rational> min_ratio;
    for (const auto& [m, e] : shape.entries()) {
      const std::int64_t g = std::gcd(m, k);
      c2_squared *= pow(make_rational(g, m), e);
      const Rational ratio = make_rational(to_bigint(g) * to_bigint(g), to_bigint(m));
      c3 -= ratio * to_bigint(e);
      if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
    }
    out.g.push_back(*min_ratio - c3 / 24);
    out.c2_squared.push_back(std::move(c2_squared));
    out.c3.push_back(std::move(c3));
  }
  return out;
}

HypothesisReport check_hypotheses(const DerivedConstants& constants) {
  HypothesisReport report;
  report.c1 = constants.c1;
  report.c1_positive = constants.c1 > 0;
  report.min_g = *std::min_element(constants.g.begin(), constants.g.end());
  report.g_nonnegative = report.min_g >= 0;
  report.satisfied = report.c1_positive && report.g_nonnegative;
  return report;
}

HypothesisReport check_hypotheses(const FrameShape& shape) {
  return check_hypotheses(derive_constants(shape));
}

}  // namespace etaq::frame
