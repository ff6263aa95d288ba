#include "heun/exact.hpp"
#include "heun/detail/wide.hpp"
#include "heun/types.hpp"

#include <cmath>
#include <limits>

#if defined(__SIZEOF_FLOAT128__)
#include <quadmath.h>
#endif

namespace heun
{

using boost::multiprecision::cpp_int;

ExactInteger binomial_exact(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    ExactInteger result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is C(n-k+i, i) after this step
    }
    return result;
}

ExactRational power_of_four(std::int64_t e)
{
    const ExactInteger p = ExactInteger(1) << (2 * static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? ExactRational(ExactInteger(1), p) : ExactRational(p);
}

double to_double(const ExactRational& value)
{
    const auto& num = boost::multiprecision::numerator(value);
    const auto& den = boost::multiprecision::denominator(value);
    if (num == 0) {
        return 0.0;
    }
    const bool negative = num < 0;
    const cpp_int a = negative ? cpp_int(-num) : num;

    // Scale so that the integer quotient carries 54 significant bits (53 + round bit),
    // then round half to even using the remainder as the sticky bit.
    const long shift = 54 - (static_cast<long>(boost::multiprecision::msb(a)) -
                             static_cast<long>(boost::multiprecision::msb(den)));
    cpp_int scaled_num = a;
    cpp_int scaled_den = den;
    if (shift > 0) {
        scaled_num <<= static_cast<unsigned>(shift);
    } else if (shift < 0) {
        scaled_den <<= static_cast<unsigned>(-shift);
    }
    cpp_int quotient;
    cpp_int remainder;
    boost::multiprecision::divide_qr(scaled_num, scaled_den, quotient, remainder);

    long exponent = -shift;
    // quotient has 54 or 55 bits; normalise to 54.
    if (boost::multiprecision::msb(quotient) == 54) {
        if ((quotient & 1) != 0) {
            remainder += 1; // mark sticky
        }
        quotient >>= 1;
        exponent += 1;
    }
    const bool round_bit = (quotient & 1) != 0;
    quotient >>= 1;
    exponent += 1;
    if (round_bit && (remainder != 0 || (quotient & 1) != 0)) {
        quotient += 1;
    }
    const double mantissa = static_cast<double>(static_cast<std::uint64_t>(quotient));
    const double result = std::ldexp(mantissa, static_cast<int>(exponent));
    return negative ? -result : result;
}

namespace detail
{

wide to_wide(const cpp_int& value)
{
    const bool negative = value < 0;
    cpp_int rest = negative ? cpp_int(-value) : value;
    wide result = 0;
    wide scale = 1;
    const cpp_int mask = (cpp_int(1) << 64) - 1;
    while (rest != 0) {
        const auto limb = static_cast<std::uint64_t>(rest & mask);
        result += scale * static_cast<wide>(limb);
        scale *= static_cast<wide>(18446744073709551616.0L);
        rest >>= 64;
    }
    return negative ? -result : result;
}

wide to_wide(const ExactRational& value)
{
    return to_wide(boost::multiprecision::numerator(value)) /
           to_wide(boost::multiprecision::denominator(value));
}

wide wlog1p(wide x)
{
#if defined(__SIZEOF_FLOAT128__)
    return log1pq(x);
#else
    return std::log1p(x);
#endif
}

} // namespace detail

void SeriesOptions::validate() const
{
    if (max_terms < 2) {
        throw DomainError("SeriesOptions: max_terms must be at least 2");
    }
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw DomainError("SeriesOptions: rel_tol must lie in (0, 1)");
    }
}

bool is_nonpositive_integer(double v) noexcept
{
    return v <= 0.0 && std::floor(v) == v;
}

} // namespace heun
