#pragma once

#include <stdexcept>

namespace gencol {

// Malformed or inconsistent user input (files, orders, assignments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive routine was asked to handle an instance beyond its cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gencol
