#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace vpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num / den for any nonzero den. The two-argument Rational constructor of
// older Boost releases rejects negative denominators.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace vpoly
