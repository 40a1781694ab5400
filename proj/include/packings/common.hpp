#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace packings {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Enumerations refuse (throw) instead of returning a truncated count.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int int_pow(Int base, unsigned long long exp) {
    Int r = 1;
    while (exp != 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Int factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

// N(N-1)...(N-k+1)
inline Int falling_factorial(const Int& n, unsigned k) {
    Int r = 1;
    for (unsigned j = 0; j < k; ++j) r *= (n - j);
    return r;
}

inline std::string to_decimal(const Int& v) { return v.str(); }

inline std::string to_decimal(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace packings
