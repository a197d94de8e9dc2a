#pragma once

#include <cstdint>
#include <vector>

#include "etaq/frame/constants.hpp"
#include "etaq/frame/frame_shape.hpp"
#include "etaq/frame/kloosterman.hpp"
#include "etaq/numeric/rational.hpp"
#include "etaq/numeric/real.hpp"

namespace etaq::rademacher {

// Rademacher-type series for the coefficients d(n) of an eta-quotient:
//
//   d(n) = prefactor(n) * sum_{k >= 1, c3(k) > 0} term(n, k)
//   prefactor(n) = 2 pi (1 / (24 (n - n0)))^{(c1+1)/2}
//   term(n, k)   = c2(k) c3(k)^{(c1+1)/2} A_k(n) / k
//                  * I_{1+c1}( (pi/k) sqrt((2/3) c3(k) (n - n0)) )
//
// valid for n > n0 when c1 > 0 and g(k) >= 0 for all k.

// Stopping policy of estimate_coefficient. With r the integer nearest to
// d(n, N), stop at N once
//
//   * every partial sum d(n, M), ceil(N/2) <= M <= N, rounds to r and lies
//     within `agreement` of it,
//   * |d(n, N) - r| < `distance`, and
//   * N >= max(min_terms, 2 lcm(M)).
struct RoundingRule {
  double agreement = 0.1;
  double distance = 0.4;
  std::int64_t min_terms = 8;
};

struct EvaluationOptions {
  int digits = kDefaultDigits;
  // Evaluate even when the hypotheses fail (c1 = 0, or some g(k) < 0). The
  // output is then unguaranteed. c1 < 0 is always rejected.
  bool force = false;
  RoundingRule rounding{};
};

// Terms of the series for one n, for k = 1..N.
struct RademacherTermTable {
  frame::FrameShape shape;
  std::int64_t n;
  Real prefactor;
  std::vector<Real> terms;  // terms[k-1]; exactly zero when c3(k) <= 0
  bool guaranteed;          // hypotheses hold

  // d(n, N) for N <= terms.size(), summed in ascending k.
  Real partial_sum(std::int64_t big_n) const;
  // d(n, 1), ..., d(n, terms.size())
  std::vector<Real> partial_sums() const;
};

// The summand term(n, k) without the prefactor. Zero, without evaluating a
// Bessel function, when c3(k) <= 0. Throws std::domain_error for n <= n0,
// k < 1 or c1 < 0, and PrecisionFault if A_k(n) is not numerically real.
Real rademacher_term(const frame::FrameShape& shape, const frame::DerivedConstants& constants,
                     std::int64_t n, std::int64_t k, int digits = kDefaultDigits);

// Same, reusing precomputed phases for k.
Real rademacher_term(const frame::DerivedConstants& constants, const frame::KloostermanPhases& phases,
                     std::int64_t n, int digits);

Real rademacher_prefactor(const frame::DerivedConstants& constants, std::int64_t n, int digits);

// Evaluator bound to one frame shape. Construction checks the hypotheses
// (HypothesisError unless satisfied or forced); afterwards it is immutable.
class RademacherSeries {
 public:
  explicit RademacherSeries(frame::FrameShape shape, EvaluationOptions options = {});

  const frame::FrameShape& shape() const noexcept { return shape_; }
  const frame::DerivedConstants& constants() const noexcept { return constants_; }
  const frame::HypothesisReport& hypotheses() const noexcept { return hypotheses_; }
  const EvaluationOptions& options() const noexcept { return options_; }

  RademacherTermTable term_table(std::int64_t n, std::int64_t big_n) const;
  // Tables for several n at once; A_k phases are computed once per k.
  std::vector<RademacherTermTable> term_tables(const std::vector<std::int64_t>& ns, std::int64_t big_n) const;
  Real partial_sum(std::int64_t n, std::int64_t big_n) const;

  // Adds terms until the rounding rule holds; throws NotConverged(n_cap)
  // if it does not hold by N = n_cap, and PrecisionFault if |d(n)| reaches
  // 10^(digits-10), where integer rounding is no longer resolvable.
  BigInt estimate_coefficient(std::int64_t n, std::int64_t n_cap) const;

 private:
  void require_admissible(std::int64_t n) const;

  frame::FrameShape shape_;
  frame::DerivedConstants constants_;
  frame::HypothesisReport hypotheses_;
  EvaluationOptions options_;
};

RademacherTermTable term_table(const frame::FrameShape& shape, std::int64_t n, std::int64_t big_n,
                               const EvaluationOptions& options = {});
Real partial_sum(const frame::FrameShape& shape, std::int64_t n, std::int64_t big_n,
                 const EvaluationOptions& options = {});
BigInt estimate_coefficient(const frame::FrameShape& shape, std::int64_t n, std::int64_t n_cap,
                            const EvaluationOptions& options = {});

}  // namespace etaq::rademacher
