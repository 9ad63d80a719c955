#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tautext {

/// Arbitrary-precision signed integer. Every dimension and Euler characteristic
/// in the library is carried in this type.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

/// Binomial coefficient C(n, k) for n possibly negative is not needed; n >= 0 here.
inline Integer binomial(const Integer& n, std::int64_t k)
{
    if (k < 0 || n < 0 || Integer(k) > n)
        return 0;
    Integer result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

inline Integer factorial(std::int64_t n)
{
    Integer result = 1;
    for (std::int64_t i = 2; i <= n; ++i)
        result *= i;
    return result;
}

}  // namespace tautext
