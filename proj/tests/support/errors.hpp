#pragma once

#include <optional>

#include "arbor/error.hpp"

namespace arbor::testing {

/// Kind of the arbor::Error thrown by fn, or nullopt if it returns normally.
template <typename Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace arbor::testing
