#ifndef HEUN_SERIES_HPP
#define HEUN_SERIES_HPP

#include "heun/types.hpp"

#include <cstddef>
#include <vector>

namespace heun
{

/// Parameters of the general Heun equation
///
///   u'' + (gamma/x + delta/(x-1) + epsilon/(x-a)) u' + (alpha*beta*x - q)/(x(x-1)(x-a)) u = 0
///
/// with epsilon fixed by alpha + beta + 1 = gamma + delta + epsilon. Construction
/// rejects a in {0, 1} and gamma in {0, -1, -2, ...}.
class GeneralHeunParams
{
public:
    GeneralHeunParams(double a, double q, double alpha, double beta, double gamma, double delta);

    double a() const noexcept { return a_; }
    double q() const noexcept { return q_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }
    double delta() const noexcept { return delta_; }
    double epsilon() const noexcept { return alpha_ + beta_ + 1.0 - gamma_ - delta_; }

    /// Radius of the disk around 0 on which the local series converges.
    double radius() const noexcept;

private:
    double a_;
    double q_;
    double alpha_;
    double beta_;
    double gamma_;
    double delta_;
};

/// Parameters of the confluent Heun equation
///
///   u'' + (4p + gamma/x + delta/(x-1)) u' + (4p*alpha*x - sigma)/(x(x-1)) u = 0.
class ConfluentHeunParams
{
public:
    ConfluentHeunParams(double p, double gamma, double delta, double alpha, double sigma);

    double p() const noexcept { return p_; }
    double gamma() const noexcept { return gamma_; }
    double delta() const noexcept { return delta_; }
    double alpha() const noexcept { return alpha_; }
    double sigma() const noexcept { return sigma_; }

private:
    double p_;
    double gamma_;
    double delta_;
    double alpha_;
    double sigma_;
};

/// Value and first two derivatives of a power series, with the same convergence
/// bookkeeping as EvalResult.
struct SeriesJet
{
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
    std::size_t terms_used = 0;
    bool converged = false;
    double error_estimate = 0.0;
};

/// Local Heun function Hl(a, q; alpha, beta; gamma, delta; x), normalised by u(0) = 1,
/// summed from the Frobenius recurrence
///
///   a(k+1)(k+gamma) c[k+1] = (k((k-1+gamma)(1+a) + a*delta + epsilon) + q) c[k]
///                            - (k-1+alpha)(k-1+beta) c[k-1].
///
/// Requires |x| < min(1, |a|). Summation stops once three consecutive terms fall
/// below rel_tol relative to the partial sum.
EvalResult eval_heun_local(const GeneralHeunParams& params, double x, const SeriesOptions& opts = {});

/// As eval_heun_local, additionally returning u'(x) and u''(x) from the termwise
/// differentiated series.
SeriesJet heun_local_jet(const GeneralHeunParams& params, double x, const SeriesOptions& opts = {});

/// First `count` Taylor coefficients of Hl at 0.
std::vector<double> heun_local_coefficients(const GeneralHeunParams& params, std::size_t count);

/// Confluent Heun function HC(p, gamma, delta, alpha, sigma; x), u(0) = 1, from
///
///   (k+1)(k+gamma) c[k+1] = (k(k-1+gamma+delta-4p) - sigma) c[k] + 4p(k-1+alpha) c[k-1].
///
/// Requires |x| < 1.
EvalResult eval_confluent_heun(const ConfluentHeunParams& params, double x, const SeriesOptions& opts = {});

SeriesJet confluent_heun_jet(const ConfluentHeunParams& params, double x, const SeriesOptions& opts = {});

std::vector<double> confluent_heun_coefficients(const ConfluentHeunParams& params, std::size_t count);

/// u'(0) = q / (a gamma).
double heun_slope_at_origin(const GeneralHeunParams& params) noexcept;

struct HomotopyTransform
{
    double exponent;
    GeneralHeunParams transformed;
};

/// Hl(a,q;alpha,beta;gamma,delta;x)
///   = (1 - x/a)^e Hl(a, q - gamma(alpha+beta-gamma-delta); -alpha+gamma+delta, -beta+gamma+delta; gamma, delta; x)
/// with e = -alpha - beta + gamma + delta.
HomotopyTransform transform_homotopy(const GeneralHeunParams& params);

/// Residual of the polynomial form x(x-1)(x-a)u'' + P(x)u' + (alpha*beta*x - q)u of the
/// general Heun equation at the evaluated series.
double heun_ode_residual(const GeneralHeunParams& params, double x, const SeriesOptions& opts = {});

/// Residual of x(x-1)u'' + (4p x(x-1) + gamma(x-1) + delta x)u' + (4p alpha x - sigma)u.
double confluent_ode_residual(const ConfluentHeunParams& params, double x, const SeriesOptions& opts = {});

} // namespace heun

#endif
