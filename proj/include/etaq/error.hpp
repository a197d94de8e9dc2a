#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace etaq {

// Base for failures that callers are expected to handle (bad input text,
// unmet hypotheses, non-convergence). Precondition violations on the
// numeric API throw std::invalid_argument / std::domain_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NotConverged : public Error {
 public:
  explicit NotConverged(std::int64_t cap)
      : Error("partial sums did not settle on an integer within N = " + std::to_string(cap) + " terms"),
        cap_(cap) {}
  std::int64_t cap() const noexcept { return cap_; }

 private:
  std::int64_t cap_;
};

// Raised when a quantity known to be real comes out with an imaginary part
// above the working tolerance.
class PrecisionFault : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace etaq
