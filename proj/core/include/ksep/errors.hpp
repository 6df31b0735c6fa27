#pragma once

#include <stdexcept>

namespace ksep {

/// A documented operation precondition was violated (e.g. non-intersecting
/// input to the decomposition). The message names the failed condition.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The instance is too large for the requested method; nothing was computed.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ksep
