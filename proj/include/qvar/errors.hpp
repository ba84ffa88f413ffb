#pragma once

#include <stdexcept>

namespace qvar {

/// A mathematical precondition does not hold (non-flat input, mixed-sign
/// stability parameter, edge loops where they are excluded, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (unknown vertex, bad JSON shape, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qvar
