#pragma once

#include <stdexcept>

namespace cmotzkin {

/// An input word failed validation.
struct invalid_word : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A conversion could not find a step the theory guarantees to exist.
/// This signals a defect in the implementation, not bad input.
struct algorithm_defect : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cmotzkin
