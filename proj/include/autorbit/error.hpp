#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace autorbit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that cannot be turned into a permutation or group.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A group is too large for exhaustive element enumeration.
class CapacityError : public Error {
 public:
  CapacityError(std::uint64_t order, std::uint64_t cap)
      : Error("group order " + std::to_string(order) +
              " exceeds element cap " + std::to_string(cap)),
        order_(order),
        cap_(cap) {}
  std::uint64_t order() const { return order_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

class NotNormalError : public Error {
 public:
  using Error::Error;
};

class UnknownGroupError : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace autorbit
