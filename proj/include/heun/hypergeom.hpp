#ifndef HEUN_HYPERGEOM_HPP
#define HEUN_HYPERGEOM_HPP

#include "heun/exact.hpp"
#include "heun/types.hpp"

#include <vector>

namespace heun
{

struct Gauss2F1Params
{
    Gauss2F1Params(double a, double b, double c);

    double a;
    double b;
    double c;

    /// True when a or b is 0, -1, -2, ..., so the series is a polynomial.
    bool terminates() const noexcept;
};

struct Clausen3F2Params
{
    Clausen3F2Params(double a1, double a2, double a3, double b1, double b2);

    double a1;
    double a2;
    double a3;
    double b1;
    double b2;

    /// b1 + b2 - a1 - a2 - a3; the unit-argument series converges iff this is positive
    /// (or the series terminates).
    double excess() const noexcept;
    bool terminates() const noexcept;
};

/// 2F1(a, b; c; x) = sum_j (a)_j (b)_j / ((c)_j j!) x^j for |x| < 1, or any x when the
/// series terminates. error_estimate carries the geometric tail estimate.
EvalResult gauss_2f1(const Gauss2F1Params& p, double x, const SeriesOptions& opts = {});

/// Derivatives d^m/dx^m 2F1(a,b;c;x) for m = 0..order, from the termwise differentiated series.
std::vector<double> gauss_2f1_derivatives(const Gauss2F1Params& p, double x, unsigned order,
                                          const SeriesOptions& opts = {});

/// 3F2(a1, a2, a3; b1, b2; 1). The terms decay algebraically, so the partial sums are
/// accelerated with the Levin u-transform; error_estimate is the change between the last
/// two transforms. Throws DivergentSeries when b1 + b2 - a1 - a2 - a3 <= 0 and the series
/// does not terminate.
EvalResult clausen_3f2_unit(const Clausen3F2Params& p, const SeriesOptions& opts = {});

/// Hl(1/2, q; 2q, 1; 1, 1; x) as u(x)/u(0) with
///
///   u(x) = sum_k (1/2)_k (q)_k / (k! (q+1/2)_k) * q/(q+k) * 2F1(2q, 1; 1+2q+2k; x),
///   u(0) = 3F2(1/2, q, q; q+1/2, q+1; 1).
///
/// q must avoid 0, -1, -2, ... and -1/2, -3/2, ...; |x| < 1.
EvalResult eval_hl_hypergeometric(double q, double x, const SeriesOptions& opts = {});

/// e_n = 1 + 1/2 + ... + 1/n, with e_0 = 0.
ExactRational harmonic(unsigned n);

/// a_{jk} = (1/(2k)!) (sum_{i<j} C(2k,i)(-1)^i/(j-i) + (-1)^j C(2k,j) e_{2k}).
ExactRational coefficient_a(unsigned j, unsigned k);

/// 2F1(m, 1; m+2k+1; x) in closed form
///
///   (m)_{2k+1} x^{-m-2k} ((1-x)^{2k}/(2k)! (e_{2k} - log(1-x)) - sum_j a_{jk} x^j
///                         - sum_{i=0}^{m-2} x^{i+2k+1}/(i+1)_{2k+1}).
///
/// Only evaluated for 0.1 <= x < 1; below that the bracket cancels too heavily and the
/// direct series must be used.
double gauss_2f1_closed(unsigned m, unsigned k, double x);

inline constexpr double closed_form_lower_bound = 0.1;

} // namespace heun

#endif
