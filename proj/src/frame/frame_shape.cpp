#include "etaq/frame/frame_shape.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "etaq/error.hpp"

namespace etaq::frame {

namespace {

// Upper bound on lcm(M); the constant tables hold one entry per residue.
constexpr std::int64_t kMaxPeriod = 10'000'000;

std::int64_t parse_int(std::string_view text, std::string_view token) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("malformed frame-shape token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

FrameShape::FrameShape(Entries entries) : entries_(std::move(entries)), period_(1) {
  if (entries_.empty()) throw std::invalid_argument("frame shape must have at least one factor");
  for (const auto& [m, e] : entries_) {
    if (m < 1) throw std::invalid_argument("frame-shape scale must be >= 1, got " + std::to_string(m));
    if (e == 0) throw std::invalid_argument("frame-shape exponent for scale " + std::to_string(m) + " is zero");
    period_ = std::lcm(period_, m);
    if (period_ > kMaxPeriod) throw std::invalid_argument("lcm of frame-shape scales is too large");
  }
}

FrameShape FrameShape::parse(std::string_view text) {
  Entries entries;
  std::size_t pos = 0;
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    const auto caret = token.find('^');
    const std::int64_t m = parse_int(token.substr(0, caret), token);
    const std::int64_t e = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), token);
    if (m < 1) throw ParseError("scale must be a positive integer in '" + std::string(token) + "'");
    if (e == 0) throw ParseError("exponent must be nonzero in '" + std::string(token) + "'");
    if (!entries.emplace(m, e).second) {
      throw ParseError("duplicate scale " + std::to_string(m) + " in frame shape");
    }
  }
  if (entries.empty()) throw ParseError("empty frame shape");
  try {
    return FrameShape(std::move(entries));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

std::string FrameShape::to_string() const {
  std::string out;
  for (const auto& [m, e] : entries_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(m) + '^' + std::to_string(e);
  }
  return out;
}

}  // namespace etaq::frame
