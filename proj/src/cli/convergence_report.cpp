#include "etaq/cli/convergence_report.hpp"

#include <ostream>
#include <stdexcept>

#include "etaq/qseries/exact_coefficients.hpp"

namespace etaq::cli {

namespace {

constexpr int kPartialFractionDigits = 25;
constexpr int kErrorSignificantDigits = 10;

}  // namespace

ConvergenceReport build_convergence_report(const frame::FrameShape& shape, std::int64_t n_min, std::int64_t n_max,
                                           std::int64_t big_n_max, const rademacher::EvaluationOptions& options) {
  if (big_n_max < 1) throw std::invalid_argument("Nmax must be >= 1");
  const rademacher::RademacherSeries series(shape, options);
  std::vector<std::int64_t> ns;
  for (std::int64_t n = std::max<std::int64_t>(n_min, 0); n <= n_max; ++n) {
    if (Rational(to_bigint(n)) > series.constants().n0) ns.push_back(n);
  }

  ConvergenceReport report{shape, {}};
  if (ns.empty()) return report;
  const std::vector<BigInt> exact = qseries::exact_coefficients(shape, ns.back());
  const auto tables = series.term_tables(ns, big_n_max);
  report.rows.reserve(ns.size() * static_cast<std::size_t>(big_n_max));
  for (const auto& table : tables) {
    const auto sums = table.partial_sums();
    for (std::size_t i = 0; i < sums.size(); ++i) {
      report.rows.push_back(ConvergenceRow{table.n, static_cast<std::int64_t>(i) + 1, sums[i],
                                           exact[static_cast<std::size_t>(table.n)]});
    }
  }
  return report;
}

void write_csv(std::ostream& out, const ConvergenceReport& report) {
  const std::string shape = report.shape.to_string();
  out << "shape,n,N,partial_sum,exact,abs_error\n";
  for (const auto& row : report.rows) {
    out << shape << ',' << row.n << ',' << row.big_n << ',' << row.partial.to_fixed(kPartialFractionDigits) << ','
        << row.exact.get_str() << ',' << row.abs_error().to_scientific(kErrorSignificantDigits) << '\n';
  }
}

}  // namespace etaq::cli
