#include "heun/series.hpp"
#include "heun/detail/series_sum.hpp"

#include <cmath>
#include <sstream>

namespace heun
{

using detail::wide;

GeneralHeunParams::GeneralHeunParams(double a, double q, double alpha, double beta, double gamma, double delta)
    : a_(a), q_(q), alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta)
{
    for (const double v : {a, q, alpha, beta, gamma, delta}) {
        if (!std::isfinite(v)) {
            throw DomainError("GeneralHeunParams: parameters must be finite");
        }
    }
    if (a == 0.0 || a == 1.0) {
        throw DomainError("GeneralHeunParams: a must not be 0 or 1");
    }
    if (is_nonpositive_integer(gamma)) {
        throw DomainError("GeneralHeunParams: gamma must not be 0 or a negative integer");
    }
}

double GeneralHeunParams::radius() const noexcept { return std::min(1.0, std::abs(a_)); }

ConfluentHeunParams::ConfluentHeunParams(double p, double gamma, double delta, double alpha, double sigma)
    : p_(p), gamma_(gamma), delta_(delta), alpha_(alpha), sigma_(sigma)
{
    for (const double v : {p, gamma, delta, alpha, sigma}) {
        if (!std::isfinite(v)) {
            throw DomainError("ConfluentHeunParams: parameters must be finite");
        }
    }
    if (p == 0.0) {
        throw DomainError("ConfluentHeunParams: p must be nonzero");
    }
    if (is_nonpositive_integer(gamma)) {
        throw DomainError("ConfluentHeunParams: gamma must not be 0 or a negative integer");
    }
}

namespace
{

struct HeunStep
{
    wide a, q, alpha, beta, gamma, delta, epsilon;

    explicit HeunStep(const GeneralHeunParams& p)
        : a(p.a()), q(p.q()), alpha(p.alpha()), beta(p.beta()), gamma(p.gamma()), delta(p.delta()),
          epsilon(static_cast<wide>(p.alpha()) + p.beta() + 1 - p.gamma() - p.delta())
    {
    }

    wide first() const { return q / (a * gamma); }

    // c[k+1] from c[k], c[k-1], k >= 1
    wide operator()(std::size_t kk, wide ck, wide ckm1) const
    {
        const wide k = static_cast<wide>(kk);
        const wide diag = k * ((k - 1 + gamma) * (1 + a) + a * delta + epsilon) + q;
        const wide sub = (k - 1 + alpha) * (k - 1 + beta);
        return (diag * ck - sub * ckm1) / (a * (k + 1) * (k + gamma));
    }
};

struct ConfluentStep
{
    wide p, gamma, delta, alpha, sigma;

    explicit ConfluentStep(const ConfluentHeunParams& c)
        : p(c.p()), gamma(c.gamma()), delta(c.delta()), alpha(c.alpha()), sigma(c.sigma())
    {
    }

    wide first() const { return -sigma / gamma; }

    wide operator()(std::size_t kk, wide ck, wide ckm1) const
    {
        const wide k = static_cast<wide>(kk);
        const wide diag = k * (k - 1 + gamma + delta - 4 * p) - sigma;
        const wide sub = 4 * p * (k - 1 + alpha);
        return (diag * ck + sub * ckm1) / ((k + 1) * (k + gamma));
    }
};

template <typename Step>
std::vector<double> coefficients(const Step& step, std::size_t count)
{
    std::vector<double> out;
    out.reserve(count);
    wide prev = 0;
    wide cur = 1;
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(static_cast<double>(cur));
        const wide next = k == 0 ? step.first() : step(k, cur, prev);
        prev = cur;
        cur = next;
    }
    return out;
}

void check_heun_domain(const GeneralHeunParams& params, double x)
{
    if (!(std::abs(x) < params.radius())) {
        std::ostringstream msg;
        msg << "local Heun series: |x| = " << std::abs(x) << " is outside the disk of convergence (radius "
            << params.radius() << ")";
        throw DomainError(msg.str());
    }
}

void check_confluent_domain(double x)
{
    if (!(std::abs(x) < 1.0)) {
        throw DomainError("confluent Heun series: |x| must be below 1");
    }
}

} // namespace

EvalResult eval_heun_local(const GeneralHeunParams& params, double x, const SeriesOptions& opts)
{
    opts.validate();
    check_heun_domain(params, x);
    const HeunStep step(params);
    return detail::to_eval(detail::sum_three_term(step, step.first(), x, opts, false));
}

SeriesJet heun_local_jet(const GeneralHeunParams& params, double x, const SeriesOptions& opts)
{
    opts.validate();
    check_heun_domain(params, x);
    const HeunStep step(params);
    return detail::to_jet(detail::sum_three_term(step, step.first(), x, opts, true));
}

std::vector<double> heun_local_coefficients(const GeneralHeunParams& params, std::size_t count)
{
    return coefficients(HeunStep(params), count);
}

EvalResult eval_confluent_heun(const ConfluentHeunParams& params, double x, const SeriesOptions& opts)
{
    opts.validate();
    check_confluent_domain(x);
    const ConfluentStep step(params);
    return detail::to_eval(detail::sum_three_term(step, step.first(), x, opts, false));
}

SeriesJet confluent_heun_jet(const ConfluentHeunParams& params, double x, const SeriesOptions& opts)
{
    opts.validate();
    check_confluent_domain(x);
    const ConfluentStep step(params);
    return detail::to_jet(detail::sum_three_term(step, step.first(), x, opts, true));
}

std::vector<double> confluent_heun_coefficients(const ConfluentHeunParams& params, std::size_t count)
{
    return coefficients(ConfluentStep(params), count);
}

double heun_slope_at_origin(const GeneralHeunParams& params) noexcept
{
    return params.q() / (params.a() * params.gamma());
}

HomotopyTransform transform_homotopy(const GeneralHeunParams& params)
{
    const double g = params.gamma();
    const double d = params.delta();
    const double al = params.alpha();
    const double be = params.beta();
    return HomotopyTransform{
        -al - be + g + d,
        GeneralHeunParams(params.a(), params.q() - g * (al + be - g - d), -al + g + d, -be + g + d, g, d),
    };
}

double heun_ode_residual(const GeneralHeunParams& params, double x, const SeriesOptions& opts)
{
    const SeriesJet u = heun_local_jet(params, x, opts);
    const double a = params.a();
    const double p2 = x * (x - 1.0) * (x - a);
    const double p1 = params.gamma() * (x - 1.0) * (x - a) + params.delta() * x * (x - a) +
                      params.epsilon() * x * (x - 1.0);
    const double p0 = params.alpha() * params.beta() * x - params.q();
    return p2 * u.second + p1 * u.first + p0 * u.value;
}

double confluent_ode_residual(const ConfluentHeunParams& params, double x, const SeriesOptions& opts)
{
    const SeriesJet u = confluent_heun_jet(params, x, opts);
    const double p = params.p();
    const double p2 = x * (x - 1.0);
    const double p1 = 4.0 * p * x * (x - 1.0) + params.gamma() * (x - 1.0) + params.delta() * x;
    const double p0 = 4.0 * p * params.alpha() * x - params.sigma();
    return p2 * u.second + p1 * u.first + p0 * u.value;
}

} // namespace heun
