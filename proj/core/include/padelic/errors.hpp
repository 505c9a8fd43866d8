#pragma once

#include <cstddef>
#include <stdexcept>

namespace padelic {

// Raised when a request would materialize more state than the guard allows;
// `feasible` is the largest argument that would have been accepted.
struct ResourceError : std::runtime_error {
  ResourceError(const std::string& msg, long feasible_arg)
      : std::runtime_error(msg), feasible(feasible_arg) {}
  long feasible;
};

}  // namespace padelic
