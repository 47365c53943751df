#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arbor {

enum class ErrorKind {
  DuplicateLabel,
  SelfLoop,
  ParallelEdge,
  NonPositiveWeight,
  UnknownEndpoint,
  EmptyGraph,
  WrongSubsetSize,
  NotSquare,
  IndexOutOfRange,
  UnsortedSelector,
  ShapeMismatch,
  CapExceeded,
  NotATree,
  ColumnSumsNonzero,
  ZeroVector,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a brute-force pass would examine more subsets than allowed.
class CapExceededError : public Error {
 public:
  CapExceededError(std::string subsets, std::uint64_t cap);

  const std::string& subsets() const noexcept { return subsets_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::string subsets_;  // decimal; may exceed 64 bits
  std::uint64_t cap_;
};

}  // namespace arbor
