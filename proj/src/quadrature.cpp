#include "heun/quadrature.hpp"
#include "heun/types.hpp"

#include <cmath>
#include <numbers>

namespace heun
{

GaussLegendreRule gauss_legendre(std::size_t n)
{
    if (n == 0) {
        throw DomainError("gauss_legendre: need at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    const long double pi = std::numbers::pi_v<long double>;
    for (std::size_t i = 1; i <= half; ++i) {
        long double z = std::cos(pi * (static_cast<long double>(i) - 0.25L) / (static_cast<long double>(n) + 0.5L));
        long double dp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p1 = 1.0L;
            long double p2 = 0.0L;
            for (std::size_t j = 1; j <= n; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = ((2.0L * j - 1.0L) * z * p2 - (j - 1.0L) * p3) / static_cast<long double>(j);
            }
            dp = static_cast<long double>(n) * (z * p1 - p2) / (z * z - 1.0L);
            const long double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-19L) {
                break;
            }
        }
        const long double w = 2.0L / ((1.0L - z * z) * dp * dp);
        rule.nodes[i - 1] = static_cast<double>(-z);
        rule.nodes[n - i] = static_cast<double>(z);
        rule.weights[i - 1] = static_cast<double>(w);
        rule.weights[n - i] = static_cast<double>(w);
    }
    return rule;
}

const GaussLegendreRule& gauss_legendre_64()
{
    static const GaussLegendreRule rule = gauss_legendre(64);
    return rule;
}

const GaussLegendreRule& gauss_legendre_128()
{
    static const GaussLegendreRule rule = gauss_legendre(128);
    return rule;
}

} // namespace heun
