#pragma once

#include <stdexcept>

namespace adc {

// Malformed input documents or composition words.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace adc
