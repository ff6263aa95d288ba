#ifndef HEUN_DETAIL_WIDE_HPP
#define HEUN_DETAIL_WIDE_HPP

// Extended working precision used for internal accumulation of alternating sums.
// The public interface is double throughout; results are rounded once on return.

#include <boost/multiprecision/cpp_int.hpp>

namespace heun::detail
{

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

inline wide wabs(wide v) noexcept { return v < 0 ? -v : v; }

// Integer power by repeated squaring; keeps the sign of negative bases.
inline wide wpow(wide base, unsigned exponent) noexcept
{
    wide result = 1;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

wide to_wide(const boost::multiprecision::cpp_int& value);
wide to_wide(const boost::multiprecision::cpp_rational& value);

wide wlog1p(wide x);

} // namespace heun::detail

#endif
