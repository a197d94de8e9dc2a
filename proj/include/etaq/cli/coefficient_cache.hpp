#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "etaq/frame/frame_shape.hpp"
#include "etaq/numeric/rational.hpp"

namespace etaq::cli {

// Coefficient cache, line oriented:
//
//   # etaq <frame shape> n0=<p>/<q>
//   0 <d(0)>
//   1 <d(1)>
//   ...
//
// Indices are contiguous from 0 and values are full decimal integers.
struct CoefficientCache {
  frame::FrameShape shape;
  Rational n0;
  std::vector<BigInt> coefficients;
};

std::string cache_header(const frame::FrameShape& shape);

void write_cache(std::ostream& out, const frame::FrameShape& shape, const std::vector<BigInt>& coefficients);

// Throws ParseError on a malformed header, non-contiguous indices, or an
// n0 that disagrees with the frame shape.
CoefficientCache read_cache(std::istream& in);
CoefficientCache read_cache_file(const std::filesystem::path& path);

// Append-only update: creates the file if missing; otherwise the header and
// every stored line must agree with `coefficients` (IoError if not) and only
// the missing tail is appended. Returns the number of lines appended.
std::size_t update_cache_file(const std::filesystem::path& path, const frame::FrameShape& shape,
                              const std::vector<BigInt>& coefficients);

}  // namespace etaq::cli
