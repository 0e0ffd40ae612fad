#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qrr {

// All coefficient arithmetic is exact. Coefficients of the identity
// polynomials count weighted partitions and grow without bound, so a
// fixed-width type is never used for them.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace qrr
