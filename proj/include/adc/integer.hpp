#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace adc {

// Exact integer coefficients everywhere; no fixed-width arithmetic.
using Int = boost::multiprecision::cpp_int;

} // namespace adc
