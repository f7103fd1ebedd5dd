#pragma once

#include <stdexcept>

namespace hypercross {

/// A vector or matrix dimension outside the set an operation supports.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hypercross
