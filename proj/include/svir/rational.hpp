#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace svir {

/// Arbitrary-precision rational, stored in lowest terms with positive
/// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long num, long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// "n" when the denominator is 1, otherwise "n/d".
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace svir
