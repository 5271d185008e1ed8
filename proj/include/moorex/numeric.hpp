#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace moorex {

// Exact arithmetic types used throughout: walk counts, Moore bounds and the
// closed-form expansion bounds are all integer or rational quantities.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline BigInt ipow(int base, unsigned exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

inline double to_double(const BigInt& v) {
    return v.convert_to<double>();
}

inline double to_double(const Rational& v) {
    return v.convert_to<double>();
}

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(const BigInt& v) {
    return v.str();
}

// "p/q" in lowest terms; integers render without the denominator.
inline std::string to_string(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace moorex
