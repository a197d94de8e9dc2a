#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "etaq/frame/frame_shape.hpp"
#include "etaq/rademacher/asymptotics.hpp"
#include "etaq/rademacher/series.hpp"

namespace etaq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitHypothesis = 2,
  kExitNotConverged = 3,
  kExitParse = 4,
  kExitIo = 5,
};

inline constexpr std::int64_t kDefaultTermCap = 5000;

// Each command writes its report to `out` and returns an exit code; library
// exceptions propagate and are mapped to exit codes by run().
int cmd_check(const frame::FrameShape& shape, std::ostream& out);
int cmd_exact(const frame::FrameShape& shape, std::int64_t n_max, const std::optional<std::filesystem::path>& cache,
              std::ostream& out);
// Fixed N prints d(n, N); otherwise the adaptive integer estimate.
int cmd_rademacher(const frame::FrameShape& shape, std::int64_t n, std::optional<std::int64_t> terms,
                   std::int64_t term_cap, const rademacher::EvaluationOptions& options, std::ostream& out);
int cmd_convergence(const frame::FrameShape& shape, std::int64_t n_min, std::int64_t n_max, std::int64_t big_n_max,
                    const rademacher::EvaluationOptions& options, const std::optional<std::filesystem::path>& csv,
                    std::ostream& out);
int cmd_asympt(const frame::FrameShape& shape, std::int64_t n, const rademacher::EvaluationOptions& options,
               double epsilon, std::ostream& out);

// Full command line: parses arguments, dispatches, maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace etaq::cli
