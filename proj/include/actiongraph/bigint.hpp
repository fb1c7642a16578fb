#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "actiongraph/errors.hpp"

namespace actiongraph {

// All sequence values and counts are exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Division that must be exact. A remainder is an internal error, never a
// rounding opportunity.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0) {
        throw ExactDivisionError(std::string(context) + ": division by zero");
    }
    BigInt q = num / den;
    if (q * den != num) {
        throw ExactDivisionError(std::string(context) + ": " + num.str() + " not divisible by " +
                                 den.str());
    }
    return q;
}

// Multiplicative running-product binomial; every intermediate division is
// exact, so intermediates never exceed the final value times n.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result = exact_div(result, BigInt(i), "binomial");
    }
    return result;
}

} // namespace actiongraph
