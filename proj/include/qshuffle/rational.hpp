#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qshuffle {

// Exact arbitrary-precision scalars for the ground field.  cpp_rational is
// kept in lowest terms with positive denominator by construction.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline BigInt denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

} // namespace qshuffle
