#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locturan {

// Base of every exception thrown by the library. The CLI maps all of these
// to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, edge lists, generator specs).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// A documented precondition does not hold: bad parameter, invalid spec,
// path that is not a path, input that is not a block graph, ...
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// The input is valid but exceeds a configured resource guard
// (subset-DP vertex limit, enumeration size, unsupported encoding size).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// The transform closure visited more paths than its configured cap.
class BudgetExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

}  // namespace locturan
