#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rankdec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different field contexts, or subspaces over different base fields.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured budget.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : Error(what + ": requires " + std::to_string(required) + " items, cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// A computation contradicts a proven statement about completely decomposable codes.
/// Raised instead of silently returning a wrong answer.
class FalsificationAlarm : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rankdec
