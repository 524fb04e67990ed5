#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace curvosc {

// Exact rational scalar used by the symbolic engine and the exact series
// checks. Arbitrary-precision integers underneath, so arithmetic cannot
// overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
    return q.str();
}

inline double to_double(const Rational& q) {
    return q.template convert_to<double>();
}

}  // namespace curvosc
