#include "etaq/rademacher/asymptotics.hpp"

#include <optional>
#include <stdexcept>

#include "etaq/frame/kloosterman.hpp"
#include "etaq/rademacher/bessel.hpp"

namespace etaq::rademacher {

AsymptoticData asymptotic_estimate(const frame::FrameShape& shape, std::int64_t n,
                                   const EvaluationOptions& options, double epsilon) {
  const RademacherSeries series(shape, options);
  const frame::DerivedConstants& constants = series.constants();
  const int digits = options.digits;
  if (Rational(to_bigint(n)) <= constants.n0) {
    throw std::domain_error("coefficient index n must exceed n0 = " + to_fraction_string(constants.n0));
  }

  std::optional<Rational> best;
  std::vector<std::int64_t> leading;
  for (std::int64_t k = 1; k <= constants.period; ++k) {
    const Rational ratio = constants.c3_at(k) / (to_bigint(k) * to_bigint(k));
    if (!best || ratio > *best) {
      best = ratio;
      leading.assign(1, k);
    } else if (ratio == *best) {
      leading.push_back(k);
    }
  }
  if (*best <= 0) throw std::domain_error("no k with c3(k) > 0; the series has no leading term");

  AsymptoticData out{leading, *best, Real(digits), Real(digits), false};
  for (const std::int64_t k : leading) {
    const frame::KloostermanValue a = frame::kloosterman_like_sum(shape, k, n, digits);
    out.front_sum += sqrt(Real(constants.c2_squared_at(k), digits)) *
                     pow(Real(static_cast<long>(k), digits), constants.c1) * a.real;
  }

  const Rational shifted = Rational(to_bigint(n)) - constants.n0;
  const Real scale = pow(Real(Rational(out.c3_max / (shifted * 24)), digits), Rational((constants.c1 + 1) / 2));
  const Real argument = Real::pi(digits) * sqrt(Real(Rational(out.c3_max * shifted * 2 / 3), digits));
  out.estimate = Real::pi(digits) * 2L * scale * bessel_i(constants.c1 + 1, argument, digits) * out.front_sum;
  out.degenerate = abs(out.front_sum) < epsilon;
  return out;
}

}  // namespace etaq::rademacher
