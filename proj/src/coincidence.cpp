#include "heun/coincidence.hpp"
#include "heun/detail/wide.hpp"
#include "heun/exact.hpp"
#include "heun/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace heun
{

using detail::to_wide;
using detail::wide;
using detail::wpow;

std::string_view to_string(FMethod m) noexcept
{
    switch (m) {
    case FMethod::definitional: return "definitional";
    case FMethod::factored: return "factored";
    case FMethod::power: return "power";
    case FMethod::established: return "established";
    case FMethod::expanded: return "expanded";
    }
    return "?";
}

std::string_view to_string(GMethod m) noexcept
{
    switch (m) {
    case GMethod::definitional: return "definitional";
    case GMethod::factored: return "factored";
    case GMethod::power: return "power";
    case GMethod::established: return "established";
    }
    return "?";
}

std::string_view to_string(EntropyKind k) noexcept { return k == EntropyKind::renyi ? "renyi" : "tsallis"; }

std::optional<FMethod> parse_f_method(std::string_view name) noexcept
{
    for (const FMethod m : all_f_methods) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::optional<GMethod> parse_g_method(std::string_view name) noexcept
{
    for (const GMethod m : all_g_methods) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::optional<EntropyKind> parse_entropy_kind(std::string_view name) noexcept
{
    if (name == "renyi") {
        return EntropyKind::renyi;
    }
    if (name == "tsallis") {
        return EntropyKind::tsallis;
    }
    return std::nullopt;
}

namespace
{

void require_positive_n(int n, const char* where)
{
    if (n < 1) {
        throw DomainError(std::string(where) + ": n must be a positive integer");
    }
}

// sum_{i=0}^{m} (-1/4)^i C(m,i) C(2i+2j,i+j), exactly.
ExactRational alternating_inner(int m, int j)
{
    ExactRational sum = 0;
    for (int i = 0; i <= m; ++i) {
        ExactRational term = power_of_four(-i) * ExactRational(binomial_exact(m, i) * binomial_exact(2 * i + 2 * j, i + j));
        if (i % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

wide f_definitional(int n, wide x)
{
    const wide y = 1 - x;
    wide sum = 0;
    for (int k = 0; k <= n; ++k) {
        const wide p = to_wide(binomial_exact(n, k)) * wpow(x, k) * wpow(y, n - k);
        sum += p * p;
    }
    return sum;
}

wide f_factored(int n, wide x)
{
    const wide y = x * x - x;
    wide sum = 0;
    wide y_pow = 1;
    for (int k = 0; k <= n; ++k) {
        sum += to_wide(binomial_exact(n, k) * binomial_exact(2 * k, k)) * y_pow;
        y_pow *= y;
    }
    return sum;
}

wide f_power(int n, wide x)
{
    const wide s = (1 - 2 * x) * (1 - 2 * x);
    wide sum = 0;
    wide s_pow = 1;
    for (int j = 0; j <= n; ++j) {
        const ExactRational coeff = power_of_four(-j) * ExactRational(binomial_exact(n, j)) * alternating_inner(n - j, j);
        sum += to_wide(coeff) * s_pow;
        s_pow *= s;
    }
    return sum;
}

wide f_established(int n, wide x)
{
    const wide s = (1 - 2 * x) * (1 - 2 * x);
    wide sum = 0;
    wide s_pow = 1;
    for (int j = 0; j <= n; ++j) {
        sum += to_wide(binomial_exact(2 * j, j) * binomial_exact(2 * n - 2 * j, n - j)) * s_pow;
        s_pow *= s;
    }
    return sum / to_wide(ExactInteger(1) << (2 * n));
}

wide f_expanded(int n, wide x)
{
    const wide y = x * x - x;
    wide sum = 0;
    wide y_pow = 1;
    for (int k = 0; k <= n; ++k) {
        ExactInteger inner = 0;
        for (int j = k; j <= n; ++j) {
            inner += binomial_exact(j, k) * binomial_exact(2 * j, j) * binomial_exact(2 * n - 2 * j, n - j);
        }
        sum += to_wide(power_of_four(k - n) * ExactRational(inner)) * y_pow;
        y_pow *= y;
    }
    return sum;
}

// Odd negative powers of (1+2x) for the G closed forms.
wide g_base_inverse(double x)
{
    const wide b = 1 + 2 * static_cast<wide>(x);
    if (b == 0) {
        throw PoleError("eval_G: closed forms have a pole at x = -1/2");
    }
    return 1 / b;
}

wide g_factored(int n, double xd)
{
    const wide inv = g_base_inverse(xd);
    const wide x = xd;
    const wide y = x * x + x;
    wide sum = 0;
    wide y_pow = 1;
    for (int k = 0; k <= n - 1; ++k) {
        sum += to_wide(binomial_exact(n - 1, k) * binomial_exact(2 * k, k)) * y_pow;
        y_pow *= y;
    }
    return wpow(inv, 2 * n - 1) * sum;
}

wide g_power(int n, double xd)
{
    const wide inv = g_base_inverse(xd);
    const wide b = 1 + 2 * static_cast<wide>(xd);
    wide sum = 0;
    for (int j = 0; j <= n - 1; ++j) {
        const ExactRational coeff =
            power_of_four(-j) * ExactRational(binomial_exact(n - 1, j)) * alternating_inner(n - j - 1, j);
        // (1+2x)^{2j-2n+1} = b^{2j} inv^{2n-1}
        sum += to_wide(coeff) * wpow(b, 2 * j);
    }
    return sum * wpow(inv, 2 * n - 1);
}

wide g_established(int n, double xd)
{
    const wide inv = g_base_inverse(xd);
    const wide b = 1 + 2 * static_cast<wide>(xd);
    wide sum = 0;
    for (int j = 0; j <= n - 1; ++j) {
        sum += to_wide(binomial_exact(2 * n - 2 * j - 2, n - j - 1) * binomial_exact(2 * j, j)) * wpow(b, 2 * j);
    }
    return sum * wpow(inv, 2 * n - 1) / to_wide(ExactInteger(1) << (2 * n - 2));
}

EvalResult g_definitional(int n, double x, const SeriesOptions& opts)
{
    if (!(x >= 0.0)) {
        throw DomainError("eval_G: the definitional sum needs x >= 0");
    }
    const wide xw = x;
    const wide ratio_base = xw / (1 + xw);
    wide term = 1 / wpow(1 + xw, n); // C(n+k-1,k) x^k (1+x)^{-n-k}
    wide sum = 0;
    EvalResult out;
    for (std::size_t k = 0; k < opts.max_terms; ++k) {
        const wide sq = term * term;
        sum += sq;
        out.terms_used = k + 1;
        const wide step = (static_cast<wide>(n) + k) / (static_cast<wide>(k) + 1) * ratio_base;
        const wide rho = step * step; // squared ratio of the next term; decreases towards (x/(1+x))^2
        if (sq == 0 || (rho < 1 && sq <= static_cast<wide>(opts.rel_tol) * sum)) {
            const wide tail = sq == 0 ? wide(0) : sq * rho / (1 - rho);
            out.converged = true;
            out.error_estimate = static_cast<double>(sq + tail);
            break;
        }
        out.error_estimate = static_cast<double>(sq);
        term *= step;
    }
    out.value = static_cast<double>(sum);
    return out;
}

} // namespace

double eval_F(int n, double x, FMethod method)
{
    require_positive_n(n, "eval_F");
    if (!std::isfinite(x)) {
        throw DomainError("eval_F: x must be finite");
    }
    const wide xw = x;
    switch (method) {
    case FMethod::definitional:
        if (!(x >= 0.0 && x <= 1.0)) {
            throw DomainError("eval_F: the definitional sum needs 0 <= x <= 1");
        }
        return static_cast<double>(f_definitional(n, xw));
    case FMethod::factored: return static_cast<double>(f_factored(n, xw));
    case FMethod::power: return static_cast<double>(f_power(n, xw));
    case FMethod::established: return static_cast<double>(f_established(n, xw));
    case FMethod::expanded: return static_cast<double>(f_expanded(n, xw));
    }
    throw DomainError("eval_F: unknown method");
}

EvalResult eval_G(int n, double x, GMethod method, const SeriesOptions& opts)
{
    require_positive_n(n, "eval_G");
    opts.validate();
    if (!std::isfinite(x)) {
        throw DomainError("eval_G: x must be finite");
    }
    wide value = 0;
    switch (method) {
    case GMethod::definitional: return g_definitional(n, x, opts);
    case GMethod::factored: value = g_factored(n, x); break;
    case GMethod::power: value = g_power(n, x); break;
    case GMethod::established: value = g_established(n, x); break;
    }
    return EvalResult{static_cast<double>(value), static_cast<std::size_t>(n), true, 0.0};
}

EvalResult eval_K(int n, double x, const SeriesOptions& opts)
{
    require_positive_n(n, "eval_K");
    opts.validate();
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("eval_K: x must be a finite nonnegative number");
    }
    const double mean = n * x;
    const auto k_min = static_cast<std::size_t>(std::max(50.0, std::ceil(4.0 * mean) + 40.0));

    // Poisson weights by the ratio recurrence, started in log space so that e^{-nx}
    // cannot underflow before the mode is reached.
    EvalResult out;
    double sum = 0.0;
    double last = 0.0;
    for (std::size_t k = 0; k < opts.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const double log_p = k == 0 ? -mean : -mean + kd * std::log(mean) - std::lgamma(kd + 1.0);
        const double p = std::exp(log_p);
        const double sq = p * p;
        sum += sq;
        last = sq;
        out.terms_used = k + 1;
        const double rho = (mean / (kd + 1.0)) * (mean / (kd + 1.0));
        if (k + 1 >= k_min && rho < 1.0 && sq <= opts.rel_tol * sum) {
            out.converged = true;
            out.error_estimate = sq * rho / (1.0 - rho);
            break;
        }
    }
    if (!out.converged) {
        out.error_estimate = last;
    }
    out.value = sum;
    return out;
}

EvalResult eval_K_derivative_quadrature(int n, int j, double x)
{
    require_positive_n(n, "eval_K_derivative");
    if (j < 0) {
        throw DomainError("eval_K_derivative: j must be nonnegative");
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("eval_K_derivative: x must be a finite nonnegative number");
    }
    const double rate = 4.0 * n * x;
    auto integrand = [rate, j](double t) {
        const double s2 = std::sin(t) * std::sin(t);
        return std::pow(s2, j) * std::exp(-rate * s2);
    };
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double coarse = integrate(gauss_legendre_64(), 0.0, half_pi, integrand);
    const double fine = integrate(gauss_legendre_128(), 0.0, half_pi, integrand);
    const double scale = (2.0 / std::numbers::pi) * std::pow(-4.0 * n, j);
    return EvalResult{scale * fine, 128, true, std::abs(scale * (fine - coarse))};
}

double eval_K_derivative(int n, int j, double x) { return eval_K_derivative_quadrature(n, j, x).value; }

double eval_HC_family(int n, int j, double x)
{
    // (-n)^{-j} C(2j,j)^{-1} (2/pi) (-4n)^j I = (2/pi) 4^j / C(2j,j) I
    const double derivative = eval_K_derivative(n, j, x);
    const double normaliser = std::pow(-static_cast<double>(n), j) * to_double(ExactRational(binomial_exact(2 * j, j)));
    return derivative / normaliser;
}

double entropy(double s, EntropyKind kind)
{
    switch (kind) {
    case EntropyKind::renyi:
        if (!(s > 0.0)) {
            throw DomainError("entropy: the Renyi entropy needs s > 0");
        }
        return 0.0 - std::log(s); // +0 rather than -0 at s = 1
    case EntropyKind::tsallis: return 1.0 - s;
    }
    throw DomainError("entropy: unknown kind");
}

} // namespace heun
