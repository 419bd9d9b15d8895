#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace coprimal {

// Counts and coefficients are exact; nothing in the library clamps or wraps.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long double to_long_double(const BigInt& v) {
  return v.convert_to<long double>();
}

inline long double to_long_double(const Rational& v) {
  return v.convert_to<long double>();
}

}  // namespace coprimal
