#pragma once

// Exact scalar layer: arbitrary-precision rationals kept in canonical form
// (numerator and denominator coprime, denominator positive) by the backing
// representation, plus the few scalar helpers the rest of the library needs.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <iomanip>
#include <sstream>
#include <string>

namespace tridet {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// -1, 0 or +1.
inline int sign(const Rat& x) { return x.sign(); }

inline Int numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

// Canonical text form: "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Decimal rendering for display only, `digits` significant digits.
inline std::string to_decimal(const Rat& x, int digits = 12) {
    boost::multiprecision::cpp_bin_float_50 v(x);
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

// Decimal rendering of sqrt(x) for display only; x must be nonnegative.
inline std::string sqrt_decimal(const Rat& x, int digits = 12) {
    boost::multiprecision::cpp_bin_float_50 v(x);
    std::ostringstream os;
    os << std::setprecision(digits) << sqrt(v);
    return os.str();
}

}  // namespace tridet
