#include "heun/closed_forms.hpp"
#include "heun/detail/wide.hpp"
#include "heun/exact.hpp"

#include <cmath>
#include <string>

namespace heun
{

using detail::wide;

double pochhammer(double r, unsigned k) noexcept
{
    double result = 1.0;
    for (unsigned i = 0; i < k; ++i) {
        result *= r + static_cast<double>(i);
    }
    return result;
}

FamilyParamsNeg::FamilyParamsNeg(int n_, double theta_, double gamma_) : n(n_), theta(theta_), gamma(gamma_)
{
    if (n < 0) {
        throw DomainError("FamilyParamsNeg: n must be nonnegative");
    }
    if (!std::isfinite(theta) || !std::isfinite(gamma) || is_nonpositive_integer(gamma)) {
        throw DomainError("FamilyParamsNeg: gamma must not be 0 or a negative integer");
    }
}

GeneralHeunParams FamilyParamsNeg::heun_params() const
{
    return GeneralHeunParams(0.5, -2.0 * n * theta, -2.0 * n, 2.0 * theta, gamma, gamma);
}

FamilyParamsPos::FamilyParamsPos(int n_, double theta_, int gamma_) : n(n_), theta(theta_), gamma(gamma_)
{
    if (!(gamma > 0 && gamma <= n)) {
        throw DomainError("FamilyParamsPos: need integers 0 < gamma <= n");
    }
    if (!std::isfinite(theta)) {
        throw DomainError("FamilyParamsPos: theta must be finite");
    }
}

GeneralHeunParams FamilyParamsPos::heun_params() const
{
    return GeneralHeunParams(0.5, 2.0 * n * theta, 2.0 * n, 2.0 * theta, gamma, gamma);
}

namespace
{

// sum_{k=0}^{m} 4^k C(m,k) (num)_k/(den)_k y^k, accumulated in extended precision.
wide terminating_sum(int m, double num, double den, wide y)
{
    wide ratio = 1; // 4^k (num)_k / (den)_k
    wide y_pow = 1;
    wide sum = 0;
    for (int k = 0; k <= m; ++k) {
        sum += detail::to_wide(binomial_exact(m, k)) * ratio * y_pow;
        ratio *= 4 * (static_cast<wide>(num) + k) / (static_cast<wide>(den) + k);
        y_pow *= y;
    }
    return sum;
}

} // namespace

double eval_family_negative(const FamilyParamsNeg& fp, double x)
{
    const wide xw = x;
    return static_cast<double>(terminating_sum(fp.n, fp.theta, fp.gamma, xw * xw - xw));
}

double eval_family_positive(const FamilyParamsPos& fp, double x)
{
    const double exponent = -2.0 * (fp.n - fp.gamma + fp.theta);
    const double base = 1.0 - 2.0 * x;
    double prefactor = 1.0;
    if (base == 0.0) {
        if (exponent < 0.0) {
            throw PoleError("eval_family_positive: pole at x = 1/2");
        }
        prefactor = exponent == 0.0 ? 1.0 : 0.0;
    } else if (base < 0.0 && std::floor(exponent) != exponent) {
        throw DomainError("eval_family_positive: prefactor is not real for x > 1/2 with non-integer exponent");
    } else {
        prefactor = std::pow(base, exponent);
    }
    const wide xw = x;
    const wide sum = terminating_sum(fp.n - fp.gamma, fp.gamma - fp.theta, fp.gamma, xw * xw - xw);
    return static_cast<double>(static_cast<wide>(prefactor) * sum);
}

double eval_sample_family(int n, int i, double x)
{
    if (n < 1 || i < 0 || i > n) {
        throw DomainError("eval_sample_family: need n >= 1 and 0 <= i <= n");
    }
    // (2i)!!/(2i-1)!! = 4^i (i!)^2 / (2i)! = 4^i / C(2i,i)
    const ExactRational front = power_of_four(i - n) / ExactRational(binomial_exact(2 * i, i)) /
                                ExactRational(binomial_exact(n, i));

    const wide h = static_cast<wide>(x) - static_cast<wide>(0.5);
    const wide h2 = h * h;
    wide h_pow = 1;
    wide sum = 0;
    for (int j = 0; j <= n - i; ++j) {
        const ExactInteger c = binomial_exact(i + j, i) * binomial_exact(2 * i + 2 * j, i + j) *
                               binomial_exact(2 * n - 2 * i - 2 * j, n - i - j);
        sum += detail::to_wide(front * power_of_four(j) * c) * h_pow;
        h_pow *= h2;
    }
    return static_cast<double>(sum);
}

GeneralHeunParams sample_family_heun_params(int n, int i)
{
    if (n < 1 || i < 0 || i > n) {
        throw DomainError("sample_family_heun_params: need n >= 1 and 0 <= i <= n");
    }
    const double shift = i - n;
    return GeneralHeunParams(0.5, shift * (2.0 * i + 1.0), 2.0 * shift, 2.0 * i + 1.0, i + 1.0, i + 1.0);
}

} // namespace heun
