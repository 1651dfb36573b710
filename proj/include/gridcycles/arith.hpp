#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace gridcycles {

// Exact arbitrary-precision signed integer. Every counting path in this
// library stays in exact arithmetic; there is no floating point anywhere.
using ExactInt = boost::multiprecision::cpp_int;

// Number-theoretic Moebius function via trial division.
// Throws std::invalid_argument when m < 1.
int moebius(long m);

// All divisors of m in ascending order (first 1, last m).
// Throws std::invalid_argument when m < 1.
std::vector<long> divisors(long m);

// Binomial coefficient C(n, k); zero when k < 0 or k > n.
// Throws std::invalid_argument when n < 0.
ExactInt binomial(long n, long k);

// base^exp for exp >= 0.
ExactInt pow_int(long base, long exp);

// a / b where the division is required to be exact. A nonzero remainder is an
// internal-consistency failure and throws std::logic_error naming `context`.
ExactInt exact_div(const ExactInt& a, const ExactInt& b, const char* context);

}  // namespace gridcycles
