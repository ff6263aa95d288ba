#ifndef HEUN_EXACT_HPP
#define HEUN_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace heun
{

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k). Returns 0 when k < 0 or k > n.
ExactInteger binomial_exact(std::int64_t n, std::int64_t k);

/// 4^e as an exact rational; e may be negative.
ExactRational power_of_four(std::int64_t e);

/// Rounds an exact rational to the nearest double (ties to even).
double to_double(const ExactRational& value);

} // namespace heun

#endif
