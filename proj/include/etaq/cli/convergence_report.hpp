#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "etaq/frame/frame_shape.hpp"
#include "etaq/numeric/rational.hpp"
#include "etaq/numeric/real.hpp"
#include "etaq/rademacher/series.hpp"

namespace etaq::cli {

struct ConvergenceRow {
  std::int64_t n;
  std::int64_t big_n;
  Real partial;  // d(n, N)
  BigInt exact;  // d(n)

  Real abs_error() const { return abs(partial - Real(exact, partial.digits())); }
};

// Partial sums d(n, N) against the exact d(n) on the grid
// n in [n_min, n_max] with n > n0, N in [1, N_max]; rows ordered by n, then N.
struct ConvergenceReport {
  frame::FrameShape shape;
  std::vector<ConvergenceRow> rows;
};

ConvergenceReport build_convergence_report(const frame::FrameShape& shape, std::int64_t n_min, std::int64_t n_max,
                                           std::int64_t big_n_max,
                                           const rademacher::EvaluationOptions& options = {});

// Columns: shape,n,N,partial_sum,exact,abs_error
void write_csv(std::ostream& out, const ConvergenceReport& report);

}  // namespace etaq::cli
