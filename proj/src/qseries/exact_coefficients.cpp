#include "etaq/qseries/exact_coefficients.hpp"

#include <stdexcept>

namespace etaq::qseries {

IntegerSeries eta_quotient_series(const frame::FrameShape& shape, std::int64_t truncation) {
  if (truncation < 0) throw std::invalid_argument("n_max must be >= 0");
  IntegerSeries product = IntegerSeries::one(truncation);
  for (const auto& [m, e] : shape.entries()) {
    IntegerSeries factor = dilate(euler_series(truncation / m), m, truncation);
    product = multiply(product, pow(factor, e));
  }
  return product;
}

std::vector<BigInt> exact_coefficients(const frame::FrameShape& shape, std::int64_t n_max) {
  return eta_quotient_series(shape, n_max).coefficients();
}

}  // namespace etaq::qseries
