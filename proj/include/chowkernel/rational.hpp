#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace chowkernel {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision exact fraction. cpp_rational keeps every value in
/// canonical form: lowest terms, positive denominator, zero as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer acc = 1;
    for (int k = 2; k <= n; ++k) acc *= k;
    return Rational(acc);
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return Rational(num, den);
}

/// Renders "p" for integers and "p/q" otherwise; exact either way.
inline std::string rational_to_string(const Rational& q) {
    if (rational_den(q) == 1) return rational_num(q).str();
    return rational_num(q).str() + "/" + rational_den(q).str();
}

} // namespace chowkernel
