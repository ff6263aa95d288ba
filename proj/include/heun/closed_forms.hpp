#ifndef HEUN_CLOSED_FORMS_HPP
#define HEUN_CLOSED_FORMS_HPP

#include "heun/series.hpp"

namespace heun
{

/// Rising factorial (r)_k = r(r+1)...(r+k-1), with (r)_0 = 1.
double pochhammer(double r, unsigned k) noexcept;

/// n, theta, gamma for Hl(1/2, -2n theta; -2n, 2theta; gamma, gamma; x).
struct FamilyParamsNeg
{
    FamilyParamsNeg(int n, double theta, double gamma);

    int n;
    double theta;
    double gamma;

    GeneralHeunParams heun_params() const;
};

/// n, theta, gamma for Hl(1/2, 2n theta; 2n, 2theta; gamma, gamma; x), integers 0 < gamma <= n.
struct FamilyParamsPos
{
    FamilyParamsPos(int n, double theta, int gamma);

    int n;
    double theta;
    int gamma;

    GeneralHeunParams heun_params() const;
};

/// sum_{k=0}^{n} 4^k C(n,k) (theta)_k / (gamma)_k (x^2 - x)^k. Defined for every real x.
double eval_family_negative(const FamilyParamsNeg& fp, double x);

/// (1-2x)^{-2(n-gamma+theta)} sum_{k=0}^{n-gamma} 4^k C(n-gamma,k) (gamma-theta)_k/(gamma)_k (x^2-x)^k.
///
/// Throws PoleError at x = 1/2 when the exponent is negative, and DomainError for
/// x > 1/2 when the exponent is not an integer (the prefactor is not real there).
double eval_family_positive(const FamilyParamsPos& fp, double x);

/// Closed form of Hl(1/2, (i-n)(2i+1); 2(i-n), 2i+1; i+1, i+1; x) for 0 <= i <= n:
///
///   (2i)!!/(2i-1)!! 4^{-n} C(n,i)^{-1} sum_{j=0}^{n-i} 4^j C(i+j,i) C(2i+2j,i+j) C(2n-2i-2j,n-i-j) (x-1/2)^{2j}
///
/// using 0!! = (-1)!! = 1.
double eval_sample_family(int n, int i, double x);

/// Heun parameters whose local function eval_sample_family(n, i, .) represents.
GeneralHeunParams sample_family_heun_params(int n, int i);

} // namespace heun

#endif
