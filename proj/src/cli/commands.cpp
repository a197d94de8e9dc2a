#include "etaq/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "etaq/cli/coefficient_cache.hpp"
#include "etaq/cli/convergence_report.hpp"
#include "etaq/error.hpp"
#include "etaq/frame/constants.hpp"
#include "etaq/qseries/exact_coefficients.hpp"

namespace etaq::cli {

namespace {

constexpr int kPartialSumFractionDigits = 25;

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string text;
  for (const std::string& t : tokens) {
    if (!text.empty()) text += ' ';
    text += t;
  }
  return text;
}

void warn_if_unguaranteed(const rademacher::RademacherSeries& series, std::ostream& out) {
  if (!series.hypotheses().satisfied) {
    out << "# warning: hypotheses fail for " << series.shape().to_string()
        << "; the value below carries no convergence guarantee\n";
  }
}

}  // namespace

int cmd_check(const frame::FrameShape& shape, std::ostream& out) {
  const frame::DerivedConstants constants = frame::derive_constants(shape);
  const frame::HypothesisReport report = frame::check_hypotheses(constants);
  out << "shape  " << shape.to_string() << '\n'
      << "n0     " << to_fraction_string(constants.n0) << '\n'
      << "c1     " << to_fraction_string(constants.c1) << (report.c1_positive ? "  (> 0)" : "  (not > 0)") << '\n'
      << "period " << constants.period << '\n'
      << "k\tc2^2\tc3\tg\n";
  for (std::int64_t k = 1; k <= constants.period; ++k) {
    out << k << '\t' << to_fraction_string(constants.c2_squared_at(k)) << '\t'
        << to_fraction_string(constants.c3_at(k)) << '\t' << to_fraction_string(constants.g_at(k)) << '\n';
  }
  out << "min g  " << to_fraction_string(report.min_g) << (report.g_nonnegative ? "  (>= 0)" : "  (< 0)") << '\n'
      << "hypotheses " << (report.satisfied ? "satisfied" : "not satisfied") << '\n';
  return report.satisfied ? kExitOk : kExitHypothesis;
}

int cmd_exact(const frame::FrameShape& shape, std::int64_t n_max, const std::optional<std::filesystem::path>& cache,
              std::ostream& out) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const std::vector<BigInt> coefficients = qseries::exact_coefficients(shape, n_max);
  if (cache) update_cache_file(*cache, shape, coefficients);
  write_cache(out, shape, coefficients);
  return kExitOk;
}

int cmd_rademacher(const frame::FrameShape& shape, std::int64_t n, std::optional<std::int64_t> terms,
                   std::int64_t term_cap, const rademacher::EvaluationOptions& options, std::ostream& out) {
  const rademacher::RademacherSeries series(shape, options);
  warn_if_unguaranteed(series, out);
  if (terms) {
    out << series.partial_sum(n, *terms).to_fixed(kPartialSumFractionDigits) << '\n';
  } else {
    out << series.estimate_coefficient(n, term_cap).get_str() << '\n';
  }
  return kExitOk;
}

int cmd_convergence(const frame::FrameShape& shape, std::int64_t n_min, std::int64_t n_max, std::int64_t big_n_max,
                    const rademacher::EvaluationOptions& options, const std::optional<std::filesystem::path>& csv,
                    std::ostream& out) {
  const ConvergenceReport report = build_convergence_report(shape, n_min, n_max, big_n_max, options);
  if (!csv) {
    write_csv(out, report);
    return kExitOk;
  }
  std::ofstream file(*csv);
  if (!file) throw IoError("cannot open " + csv->string() + " for writing");
  write_csv(file, report);
  file.flush();
  if (!file) throw IoError("failed writing " + csv->string());
  out << "wrote " << report.rows.size() << " rows to " << csv->string() << '\n';
  return kExitOk;
}

int cmd_asympt(const frame::FrameShape& shape, std::int64_t n, const rademacher::EvaluationOptions& options,
               double epsilon, std::ostream& out) {
  const rademacher::AsymptoticData data = rademacher::asymptotic_estimate(shape, n, options, epsilon);
  out << "leading set";
  for (const std::int64_t k : data.leading_set) out << ' ' << k;
  out << '\n'
      << "c3max      " << to_fraction_string(data.c3_max) << '\n'
      << "front sum  " << data.front_sum.to_fixed(20) << '\n'
      << "estimate   " << data.estimate.to_fixed(10) << '\n';
  if (data.degenerate) {
    out << "# warning: |front sum| < " << epsilon << "; the estimate is not meaningful for this n\n";
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier coefficients of eta-quotients: exact q-series and Rademacher-type series"};
  app.name("etaq");
  app.require_subcommand(1);

  std::vector<std::string> shape_tokens;
  int digits = kDefaultDigits;
  bool force = false;
  std::int64_t n = 0;
  std::int64_t n_min = 1;
  std::int64_t n_max = 20;
  std::int64_t big_n_max = 100;
  std::int64_t term_cap = kDefaultTermCap;
  std::optional<std::int64_t> terms;
  std::string cache_path;
  std::string out_path;
  double epsilon = rademacher::kDefaultFrontSumEpsilon;

  const auto add_shape = [&](CLI::App* sub) {
    sub->add_option("shape", shape_tokens, "frame shape, e.g. 1^-3 4^1")->required();
  };
  const auto add_evaluation = [&](CLI::App* sub) {
    sub->add_option("--precision", digits, "working precision in decimal digits")->check(CLI::Range(1, 100000));
    sub->add_flag("--force", force, "evaluate even when the hypotheses fail");
  };

  CLI::App* check = app.add_subcommand("check", "derived constants and hypothesis check");
  add_shape(check);

  CLI::App* exact = app.add_subcommand("exact", "exact coefficients d(0..nmax) in cache format");
  add_shape(exact);
  exact->add_option("--nmax", n_max, "largest index")->required()->check(CLI::NonNegativeNumber);
  exact->add_option("--cache", cache_path, "append-only coefficient cache file");

  CLI::App* rad = app.add_subcommand("rademacher", "d(n, N), or the rounded integer d(n) when --terms is absent");
  add_shape(rad);
  rad->add_option("--n", n, "coefficient index")->required();
  rad->add_option("--terms", terms, "fixed number of terms N")->check(CLI::PositiveNumber);
  rad->add_option("--Nmax", term_cap, "term cap for the adaptive estimate")->check(CLI::PositiveNumber);
  add_evaluation(rad);

  CLI::App* conv = app.add_subcommand("convergence", "CSV of d(n, N) against exact d(n)");
  add_shape(conv);
  conv->add_option("--nmin", n_min, "smallest n");
  conv->add_option("--nmax", n_max, "largest n");
  conv->add_option("--Nmax", big_n_max, "largest N")->check(CLI::PositiveNumber);
  conv->add_option("--out", out_path, "CSV output path (stdout if absent)");
  add_evaluation(conv);

  CLI::App* asympt = app.add_subcommand("asympt", "leading-order asymptotic estimate of d(n)");
  add_shape(asympt);
  asympt->add_option("--n", n, "coefficient index")->required();
  asympt->add_option("--epsilon", epsilon, "front-sum degeneracy threshold")->check(CLI::NonNegativeNumber);
  add_evaluation(asympt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitParse;
  }

  try {
    const frame::FrameShape shape = frame::FrameShape::parse(join_tokens(shape_tokens));
    rademacher::EvaluationOptions options;
    options.digits = digits;
    options.force = force;

    if (check->parsed()) return cmd_check(shape, out);
    if (exact->parsed()) {
      return cmd_exact(shape, n_max, cache_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(cache_path),
                       out);
    }
    if (rad->parsed()) return cmd_rademacher(shape, n, terms, term_cap, options, out);
    if (conv->parsed()) {
      return cmd_convergence(shape, n_min, n_max, big_n_max, options,
                             out_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_path), out);
    }
    if (asympt->parsed()) return cmd_asympt(shape, n, options, epsilon, out);
  } catch (const HypothesisError& e) {
    err << "etaq: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const NotConverged& e) {
    err << "etaq: " << e.what() << '\n';
    return kExitNotConverged;
  } catch (const ParseError& e) {
    err << "etaq: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "etaq: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "etaq: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace etaq::cli
