#ifndef HEUN_QUADRATURE_HPP
#define HEUN_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace heun
{

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule; roots of P_n found by Newton iteration from the Chebyshev-like
/// initial guess cos(pi (i - 1/4) / (n + 1/2)).
GaussLegendreRule gauss_legendre(std::size_t n);

/// Shared 64- and 128-point rules, built once.
const GaussLegendreRule& gauss_legendre_64();
const GaussLegendreRule& gauss_legendre_128();

/// Integrates f over [lo, hi] with the given rule.
template <typename F>
double integrate(const GaussLegendreRule& rule, double lo, double hi, F&& f)
{
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

} // namespace heun

#endif
