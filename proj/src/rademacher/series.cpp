#include "etaq/rademacher/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "etaq/error.hpp"
#include "etaq/rademacher/bessel.hpp"

namespace etaq::rademacher {

namespace {

void require_term_domain(const frame::DerivedConstants& constants, std::int64_t n, std::int64_t k) {
  if (k < 1) throw std::domain_error("series index k must be >= 1");
  if (Rational(to_bigint(n)) <= constants.n0) {
    throw std::domain_error("coefficient index n must exceed n0 = " + to_fraction_string(constants.n0));
  }
  if (constants.c1 < 0) throw std::domain_error("Bessel order 1 + c1 is below 1 (c1 < 0)");
}

Real zero(int digits) { return Real(digits); }

}  // namespace

Real rademacher_prefactor(const frame::DerivedConstants& constants, std::int64_t n, int digits) {
  const Rational shifted = Rational(to_bigint(n)) - constants.n0;
  const Rational exponent = (constants.c1 + 1) / 2;
  const Real base(Rational(1) / (shifted * 24), digits);
  return Real::pi(digits) * 2L * pow(base, exponent);
}

Real rademacher_term(const frame::DerivedConstants& constants, const frame::KloostermanPhases& phases,
                     std::int64_t n, int digits) {
  const std::int64_t k = phases.k();
  require_term_domain(constants, n, k);
  const Rational& c3 = constants.c3_at(k);
  if (c3 <= 0) return zero(digits);

  const frame::KloostermanValue a = phases.evaluate(n, digits);
  frame::require_real(a, k, n, digits);

  const Rational shifted = Rational(to_bigint(n)) - constants.n0;
  const Real c2 = sqrt(Real(constants.c2_squared_at(k), digits));
  const Real c3_power = pow(Real(c3, digits), Rational((constants.c1 + 1) / 2));
  const Real argument = Real::pi(digits) / static_cast<long>(k) *
                        sqrt(Real(Rational(c3 * shifted * 2 / 3), digits));
  const Real bessel = bessel_i(constants.c1 + 1, argument, digits);
  return c2 * c3_power * a.real / static_cast<long>(k) * bessel;
}

Real rademacher_term(const frame::FrameShape& shape, const frame::DerivedConstants& constants,
                     std::int64_t n, std::int64_t k, int digits) {
  require_term_domain(constants, n, k);
  if (constants.c3_at(k) <= 0) return zero(digits);
  return rademacher_term(constants, frame::KloostermanPhases(shape, k), n, digits);
}

Real RademacherTermTable::partial_sum(std::int64_t big_n) const {
  if (big_n < 0 || static_cast<std::size_t>(big_n) > terms.size()) {
    throw std::out_of_range("partial sum index beyond the term table");
  }
  Real sum(prefactor.digits());
  for (std::int64_t k = 0; k < big_n; ++k) sum += terms[static_cast<std::size_t>(k)];
  return prefactor * sum;
}

std::vector<Real> RademacherTermTable::partial_sums() const {
  std::vector<Real> out;
  out.reserve(terms.size());
  Real sum(prefactor.digits());
  for (const Real& t : terms) {
    sum += t;
    out.push_back(prefactor * sum);
  }
  return out;
}

RademacherSeries::RademacherSeries(frame::FrameShape shape, EvaluationOptions options)
    : shape_(std::move(shape)),
      constants_(frame::derive_constants(shape_)),
      hypotheses_(frame::check_hypotheses(constants_)),
      options_(options) {
  if (constants_.c1 < 0) {
    throw HypothesisError("c1 = " + to_fraction_string(constants_.c1) +
                          " < 0: the series is not defined for this frame shape");
  }
  if (!hypotheses_.satisfied && !options_.force) {
    throw HypothesisError("hypotheses fail for " + shape_.to_string() + " (c1 = " +
                          to_fraction_string(constants_.c1) + ", min g = " +
                          to_fraction_string(hypotheses_.min_g) + "); pass force to evaluate anyway");
  }
}

void RademacherSeries::require_admissible(std::int64_t n) const {
  if (Rational(to_bigint(n)) <= constants_.n0) {
    throw std::domain_error("coefficient index n = " + std::to_string(n) + " must exceed n0 = " +
                            to_fraction_string(constants_.n0));
  }
}

std::vector<RademacherTermTable> RademacherSeries::term_tables(const std::vector<std::int64_t>& ns,
                                                               std::int64_t big_n) const {
  if (big_n < 1) throw std::invalid_argument("number of terms N must be >= 1");
  const int digits = options_.digits;
  std::vector<RademacherTermTable> tables;
  tables.reserve(ns.size());
  for (const std::int64_t n : ns) {
    require_admissible(n);
    tables.push_back(RademacherTermTable{shape_, n, rademacher_prefactor(constants_, n, digits), {},
                                         hypotheses_.satisfied});
    tables.back().terms.reserve(static_cast<std::size_t>(big_n));
  }
  for (std::int64_t k = 1; k <= big_n; ++k) {
    if (constants_.c3_at(k) <= 0) {
      for (auto& table : tables) table.terms.push_back(zero(digits));
      continue;
    }
    const frame::KloostermanPhases phases(shape_, k);
    for (auto& table : tables) table.terms.push_back(rademacher_term(constants_, phases, table.n, digits));
  }
  return tables;
}

RademacherTermTable RademacherSeries::term_table(std::int64_t n, std::int64_t big_n) const {
  return std::move(term_tables({n}, big_n).front());
}

Real RademacherSeries::partial_sum(std::int64_t n, std::int64_t big_n) const {
  return term_table(n, big_n).partial_sum(big_n);
}

BigInt RademacherSeries::estimate_coefficient(std::int64_t n, std::int64_t n_cap) const {
  require_admissible(n);
  const int digits = options_.digits;
  const RoundingRule& rule = options_.rounding;
  const Real prefactor = rademacher_prefactor(constants_, n, digits);
  const std::int64_t first_stop = std::max(rule.min_terms, 2 * constants_.period);

  Real sum(digits);
  // Partial sums d(n, M) for M >= run_start all round to run_value within
  // the agreement tolerance; run_start = 0 means no such run.
  std::int64_t run_start = 0;
  BigInt run_value;
  for (std::int64_t k = 1; k <= n_cap; ++k) {
    if (constants_.c3_at(k) > 0) {
      sum += rademacher_term(constants_, frame::KloostermanPhases(shape_, k), n, digits);
    }
    const Real current = prefactor * sum;
    const BigInt nearest = current.round();
    const Real gap = abs(current - Real(nearest, digits));
    if (gap < rule.agreement) {
      if (run_start == 0 || nearest != run_value) {
        run_start = k;
        run_value = nearest;
      }
    } else {
      run_start = 0;
    }
    if (run_start != 0 && k >= first_stop && run_start <= (k + 1) / 2 && gap < rule.distance) {
      if (!(abs(current) < power_of_ten(digits - 10, digits))) {
        throw PrecisionFault("d(" + std::to_string(n) + ") has too many digits for " + std::to_string(digits) +
                             "-digit arithmetic; raise the precision");
      }
      return nearest;
    }
  }
  throw NotConverged(n_cap);
}

RademacherTermTable term_table(const frame::FrameShape& shape, std::int64_t n, std::int64_t big_n,
                               const EvaluationOptions& options) {
  return RademacherSeries(shape, options).term_table(n, big_n);
}

Real partial_sum(const frame::FrameShape& shape, std::int64_t n, std::int64_t big_n,
                 const EvaluationOptions& options) {
  return RademacherSeries(shape, options).partial_sum(n, big_n);
}

BigInt estimate_coefficient(const frame::FrameShape& shape, std::int64_t n, std::int64_t n_cap,
                            const EvaluationOptions& options) {
  return RademacherSeries(shape, options).estimate_coefficient(n, n_cap);
}

}  // namespace etaq::rademacher
