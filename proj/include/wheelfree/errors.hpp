#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wheelfree {

// Malformed call: out-of-range vertex, u == v, wrong pair kind, bad partition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is outside the promised class. Detected downstream, e.g. a
// block classified as line whose root graph cannot be reconstructed.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSeriesParallel : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotLineGraph : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A state the algorithm proves impossible on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Brute-force routines refuse inputs above their documented size bound.
class SizeLimitExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

using Weight = std::int64_t;

inline Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidInput("weight overflow");
  return r;
}

inline Weight checked_sub(Weight a, Weight b) {
  Weight r;
  if (__builtin_sub_overflow(a, b, &r)) throw InvalidInput("weight overflow");
  return r;
}

inline Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidInput("weight overflow");
  return r;
}

}  // namespace wheelfree
