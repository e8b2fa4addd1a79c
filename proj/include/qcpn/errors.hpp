#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcpn {

/// Base class for every recoverable domain error raised by the library.
/// The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderMismatch : public DomainError {
 public:
  OrderMismatch(int lhs, int rhs)
      : DomainError("truncation order mismatch: n=" + std::to_string(lhs) +
                    " vs n=" + std::to_string(rhs)) {}
};

class NotInvertible : public DomainError {
 public:
  NotInvertible() : DomainError("not invertible over the integers") {}
};

class UnimodularityViolated : public DomainError {
 public:
  explicit UnimodularityViolated(const std::string& detail)
      : DomainError("unimodularity violated: " + detail) {}
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : DomainError("parse error at position " + std::to_string(position) +
                    ": " + msg),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class StepCapExceeded : public DomainError {
 public:
  explicit StepCapExceeded(std::size_t cap)
      : DomainError("rewrite-step budget exceeded (cap " + std::to_string(cap) +
                    ")"),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace qcpn
