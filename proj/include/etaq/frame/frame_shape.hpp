#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace etaq::frame {

// An eta-quotient prod_m eta(m tau)^{delta_m}, stored as the finite map
// m -> delta_m. Scales are >= 1, exponents nonzero, support nonempty; the
// map keeps entries in ascending m.
class FrameShape {
 public:
  using Entries = std::map<std::int64_t, std::int64_t>;

  explicit FrameShape(Entries entries);

  // Whitespace-separated tokens `m^e` (or bare `m`, meaning m^1).
  // Throws ParseError on malformed tokens, m <= 0, e == 0, duplicate m,
  // or empty input.
  static FrameShape parse(std::string_view text);

  // Canonical text form, e.g. "1^-3 4^1"; parse(to_string()) round-trips.
  std::string to_string() const;

  const Entries& entries() const noexcept { return entries_; }

  // lcm of the support; the period of c2, c3 and g in k.
  std::int64_t period() const noexcept { return period_; }

  friend bool operator==(const FrameShape&, const FrameShape&) = default;

 private:
  Entries entries_;
  std::int64_t period_;
};

}  // namespace etaq::frame
