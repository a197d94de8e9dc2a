#pragma once

#include <cstdint>
#include <vector>

#include "etaq/frame/frame_shape.hpp"
#include "etaq/numeric/rational.hpp"
#include "etaq/qseries/integer_series.hpp"

namespace etaq::qseries {

// Z(q) q^{n0} = prod_m (prod_{j>=1} (1 - q^{m j}))^{delta_m} mod q^{T+1}.
// The fractional power q^{n0} never enters: it is the same prefactor for
// every term and is tracked by frame::derive_constants.
IntegerSeries eta_quotient_series(const frame::FrameShape& shape, std::int64_t truncation);

// d(0), ..., d(n_max): the exact Fourier coefficients.
std::vector<BigInt> exact_coefficients(const frame::FrameShape& shape, std::int64_t n_max);

}  // namespace etaq::qseries
