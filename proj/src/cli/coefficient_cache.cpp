#include "etaq/cli/coefficient_cache.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "etaq/error.hpp"
#include "etaq/frame/constants.hpp"

namespace etaq::cli {

namespace {

constexpr std::string_view kHeaderPrefix = "# etaq ";
constexpr std::string_view kN0Marker = " n0=";

Rational shape_n0(const frame::FrameShape& shape) { return frame::derive_constants(shape).n0; }

}  // namespace

std::string cache_header(const frame::FrameShape& shape) {
  return std::string(kHeaderPrefix) + shape.to_string() + std::string(kN0Marker) +
         to_fraction_string(shape_n0(shape));
}

void write_cache(std::ostream& out, const frame::FrameShape& shape, const std::vector<BigInt>& coefficients) {
  out << cache_header(shape) << '\n';
  for (std::size_t n = 0; n < coefficients.size(); ++n) out << n << ' ' << coefficients[n].get_str() << '\n';
}

CoefficientCache read_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(kHeaderPrefix, 0) != 0) {
    throw ParseError("coefficient cache: missing '# etaq' header");
  }
  const auto marker = line.rfind(kN0Marker);
  if (marker == std::string::npos || marker < kHeaderPrefix.size()) {
    throw ParseError("coefficient cache: header lacks n0=");
  }
  frame::FrameShape shape =
      frame::FrameShape::parse(std::string_view(line).substr(kHeaderPrefix.size(), marker - kHeaderPrefix.size()));
  const std::string n0_text = line.substr(marker + kN0Marker.size());
  Rational n0;
  if (n0_text.find('/') == std::string::npos || n0.set_str(n0_text, 10) != 0) {
    throw ParseError("coefficient cache: malformed n0 '" + n0_text + "'");
  }
  n0.canonicalize();
  if (n0 != shape_n0(shape)) throw ParseError("coefficient cache: n0 does not match the frame shape");

  CoefficientCache cache{std::move(shape), n0, {}};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::size_t index = 0;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw ParseError("coefficient cache: malformed line '" + line + "'");
    }
    if (index != cache.coefficients.size()) throw ParseError("coefficient cache: indices are not contiguous");
    BigInt d;
    if (d.set_str(value, 10) != 0) throw ParseError("coefficient cache: bad integer '" + value + "'");
    cache.coefficients.push_back(std::move(d));
  }
  return cache;
}

CoefficientCache read_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coefficient cache " + path.string());
  return read_cache(in);
}

std::size_t update_cache_file(const std::filesystem::path& path, const frame::FrameShape& shape,
                              const std::vector<BigInt>& coefficients) {
  if (!std::filesystem::exists(path)) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot create coefficient cache " + path.string());
    write_cache(out, shape, coefficients);
    if (!out.flush()) throw IoError("write failed for " + path.string());
    return coefficients.size();
  }

  const CoefficientCache existing = [&path] {
    try {
      return read_cache_file(path);
    } catch (const ParseError& ex) {
      throw IoError(std::string("existing cache is unreadable: ") + ex.what());
    }
  }();
  if (!(existing.shape == shape)) {
    throw IoError("cache " + path.string() + " belongs to frame shape " + existing.shape.to_string());
  }
  const std::size_t common = std::min(existing.coefficients.size(), coefficients.size());
  for (std::size_t n = 0; n < common; ++n) {
    if (existing.coefficients[n] != coefficients[n]) {
      throw IoError("cache " + path.string() + " disagrees at n = " + std::to_string(n));
    }
  }
  if (coefficients.size() <= existing.coefficients.size()) return 0;

  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot append to coefficient cache " + path.string());
  for (std::size_t n = existing.coefficients.size(); n < coefficients.size(); ++n) {
    out << n << ' ' << coefficients[n].get_str() << '\n';
  }
  if (!out.flush()) throw IoError("write failed for " + path.string());
  return coefficients.size() - existing.coefficients.size();
}

}  // namespace etaq::cli
