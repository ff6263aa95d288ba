#include "heun/hypergeom.hpp"
#include "heun/detail/levin.hpp"
#include "heun/detail/wide.hpp"

#include <algorithm>
#include <cmath>

namespace heun
{

using detail::to_wide;
using detail::wabs;
using detail::wide;

Gauss2F1Params::Gauss2F1Params(double a_, double b_, double c_) : a(a_), b(b_), c(c_)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw DomainError("Gauss2F1Params: parameters must be finite");
    }
    if (is_nonpositive_integer(c)) {
        throw DomainError("Gauss2F1Params: c must not be 0 or a negative integer");
    }
}

bool Gauss2F1Params::terminates() const noexcept { return is_nonpositive_integer(a) || is_nonpositive_integer(b); }

Clausen3F2Params::Clausen3F2Params(double a1_, double a2_, double a3_, double b1_, double b2_)
    : a1(a1_), a2(a2_), a3(a3_), b1(b1_), b2(b2_)
{
    for (const double v : {a1, a2, a3, b1, b2}) {
        if (!std::isfinite(v)) {
            throw DomainError("Clausen3F2Params: parameters must be finite");
        }
    }
    if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2)) {
        throw DomainError("Clausen3F2Params: b1, b2 must not be 0 or negative integers");
    }
}

double Clausen3F2Params::excess() const noexcept { return b1 + b2 - a1 - a2 - a3; }

bool Clausen3F2Params::terminates() const noexcept
{
    return is_nonpositive_integer(a1) || is_nonpositive_integer(a2) || is_nonpositive_integer(a3);
}

namespace
{

struct Gauss2F1Sum
{
    std::vector<wide> derivatives;
    std::size_t terms_used = 0;
    bool converged = false;
    wide tail = 0;
};

// Termwise sum of d^m/dx^m of the 2F1 series for m = 0..order.
Gauss2F1Sum sum_2f1(const Gauss2F1Params& p, double x_in, unsigned order, const SeriesOptions& opts)
{
    opts.validate();
    const bool finite = p.terminates();
    if (!std::isfinite(x_in) || (!finite && !(std::abs(x_in) < 1.0))) {
        throw DomainError("gauss_2f1: |x| must be below 1 unless the series terminates");
    }
    const wide x = x_in;
    const wide a = p.a;
    const wide b = p.b;
    const wide c = p.c;
    const wide tol = opts.rel_tol;

    Gauss2F1Sum out;
    out.derivatives.assign(order + 1, 0);
    wide coeff = 1; // (a)_j (b)_j / ((c)_j j!)
    std::size_t small_run = 0;
    for (std::size_t j = 0; j < opts.max_terms; ++j) {
        bool small = true;
        wide value_term = 0;
        // d^m x^j = j!/(j-m)! x^{j-m}
        for (unsigned m = 0; m <= order && m <= j; ++m) {
            wide falling = 1;
            for (unsigned i = 0; i < m; ++i) {
                falling *= static_cast<wide>(j - i);
            }
            const wide t = coeff * falling * detail::wpow(x, static_cast<unsigned>(j - m));
            if (m == 0) {
                value_term = t;
            }
            out.derivatives[m] += t;
            small = small && wabs(t) <= tol * wabs(out.derivatives[m]);
        }
        out.terms_used = j + 1;
        out.tail = wabs(value_term);
        if (coeff == 0) {
            out.converged = true;
            out.tail = 0;
            break;
        }
        const wide jw = static_cast<wide>(j);
        const wide step = (a + jw) * (b + jw) / ((c + jw) * (jw + 1));
        const wide r = wabs(step * x);
        if (small && r < 1) {
            const wide tail = wabs(value_term) * r / (1 - r);
            small_run = tail <= tol * wabs(out.derivatives[0]) ? small_run + 1 : 0;
            if (small_run >= 3) {
                out.converged = true;
                out.tail = tail;
                break;
            }
        } else {
            small_run = 0;
        }
        coeff *= step;
    }
    return out;
}

} // namespace

EvalResult gauss_2f1(const Gauss2F1Params& p, double x, const SeriesOptions& opts)
{
    const Gauss2F1Sum s = sum_2f1(p, x, 0, opts);
    return EvalResult{static_cast<double>(s.derivatives[0]), s.terms_used, s.converged, static_cast<double>(s.tail)};
}

std::vector<double> gauss_2f1_derivatives(const Gauss2F1Params& p, double x, unsigned order, const SeriesOptions& opts)
{
    const Gauss2F1Sum s = sum_2f1(p, x, order, opts);
    std::vector<double> out;
    out.reserve(s.derivatives.size());
    for (const wide d : s.derivatives) {
        out.push_back(static_cast<double>(d));
    }
    return out;
}

EvalResult clausen_3f2_unit(const Clausen3F2Params& p, const SeriesOptions& opts)
{
    opts.validate();
    if (!p.terminates() && !(p.excess() > 0.0)) {
        throw DivergentSeries("clausen_3f2_unit: b1 + b2 - a1 - a2 - a3 must be positive at unit argument");
    }
    const wide a1 = p.a1;
    const wide a2 = p.a2;
    const wide a3 = p.a3;
    const wide b1 = p.b1;
    const wide b2 = p.b2;
    wide coeff = 1;
    std::size_t next = 0;
    // terms are requested in order 0, 1, 2, ...
    auto term = [&](std::size_t k) {
        while (next < k) {
            const wide n = static_cast<wide>(next);
            coeff *= (a1 + n) * (a2 + n) * (a3 + n) / ((b1 + n) * (b2 + n) * (n + 1));
            ++next;
        }
        return coeff;
    };
    if (p.terminates()) {
        wide sum = 0;
        for (std::size_t k = 0; k < opts.max_terms; ++k) {
            const wide t = term(k);
            if (t == 0) {
                return EvalResult{static_cast<double>(sum), k, true, 0.0};
            }
            sum += t;
        }
        return EvalResult{static_cast<double>(sum), opts.max_terms, false, static_cast<double>(wabs(coeff))};
    }
    return detail::levin_u_sum(term, opts);
}

EvalResult eval_hl_hypergeometric(double q, double x, const SeriesOptions& opts)
{
    opts.validate();
    if (!std::isfinite(q) || is_nonpositive_integer(q) || is_nonpositive_integer(q + 0.5)) {
        throw DomainError("eval_hl_hypergeometric: q must avoid 0, -1, -2, ... and -1/2, -3/2, ...");
    }
    if (!(std::abs(x) < 1.0)) {
        throw DomainError("eval_hl_hypergeometric: |x| must be below 1");
    }
    const Clausen3F2Params at_zero(0.5, q, q, q + 0.5, q + 1.0);
    const EvalResult denominator = clausen_3f2_unit(at_zero, opts);

    const wide qw = q;
    wide weight = 1; // (1/2)_k (q)_k / (k! (q+1/2)_k)
    std::size_t next = 0;
    // the inner sums feed an extrapolation, so keep them well below the outer tolerance
    SeriesOptions inner = opts;
    inner.rel_tol = std::min(opts.rel_tol, 1e-28);
    bool inner_converged = true;
    auto term = [&](std::size_t k) {
        while (next < k) {
            const wide n = static_cast<wide>(next);
            weight *= (wide(0.5) + n) * (qw + n) / ((n + 1) * (qw + wide(0.5) + n));
            ++next;
        }
        const double kd = static_cast<double>(k);
        const Gauss2F1Sum f = sum_2f1(Gauss2F1Params(2.0 * q, 1.0, 1.0 + 2.0 * q + 2.0 * kd), x, 0, inner);
        inner_converged = inner_converged && f.converged;
        return weight * qw / (qw + static_cast<wide>(k)) * f.derivatives[0];
    };
    const EvalResult numerator = detail::levin_u_sum(term, opts);

    EvalResult out;
    out.value = numerator.value / denominator.value;
    out.terms_used = numerator.terms_used;
    out.converged = numerator.converged && denominator.converged && inner_converged;
    out.error_estimate = std::abs(out.value) * (numerator.error_estimate / std::abs(numerator.value) +
                                                denominator.error_estimate / std::abs(denominator.value));
    return out;
}

ExactRational harmonic(unsigned n)
{
    ExactRational sum = 0;
    for (unsigned i = 1; i <= n; ++i) {
        sum += ExactRational(ExactInteger(1), ExactInteger(i));
    }
    return sum;
}

ExactRational coefficient_a(unsigned j, unsigned k)
{
    const unsigned two_k = 2 * k;
    ExactRational inner = 0;
    for (unsigned i = 0; i < j; ++i) {
        const ExactRational t(binomial_exact(two_k, i), ExactInteger(j - i));
        if (i % 2 == 1) {
            inner -= t;
        } else {
            inner += t;
        }
    }
    const ExactRational last = ExactRational(binomial_exact(two_k, j)) * harmonic(two_k);
    if (j % 2 == 1) {
        inner -= last;
    } else {
        inner += last;
    }
    ExactInteger factorial = 1;
    for (unsigned i = 2; i <= two_k; ++i) {
        factorial *= i;
    }
    return inner / ExactRational(factorial);
}

double gauss_2f1_closed(unsigned m, unsigned k, double x)
{
    if (m < 1) {
        throw DomainError("gauss_2f1_closed: m must be a positive integer");
    }
    if (!(x >= closed_form_lower_bound && x < 1.0)) {
        throw DomainError("gauss_2f1_closed: x must lie in [0.1, 1); use the direct series below 0.1");
    }
    const unsigned two_k = 2 * k;
    const wide xw = x;
    const wide one_minus = 1 - xw;

    ExactInteger factorial = 1;
    for (unsigned i = 2; i <= two_k; ++i) {
        factorial *= i;
    }
    const wide log_term = to_wide(harmonic(two_k)) - detail::wlog1p(-xw);
    wide bracket = detail::wpow(one_minus, two_k) / to_wide(factorial) * log_term;
    for (unsigned j = 0; j <= two_k; ++j) {
        bracket -= to_wide(coefficient_a(j, k)) * detail::wpow(xw, j);
    }
    for (unsigned i = 0; i + 2 <= m; ++i) {
        wide rising = 1; // (i+1)_{2k+1}
        for (unsigned t = 0; t <= two_k; ++t) {
            rising *= static_cast<wide>(i + 1 + t);
        }
        bracket -= detail::wpow(xw, i + two_k + 1) / rising;
    }
    wide front = 1; // (m)_{2k+1}
    for (unsigned t = 0; t <= two_k; ++t) {
        front *= static_cast<wide>(m + t);
    }
    return static_cast<double>(front * bracket / detail::wpow(xw, m + two_k));
}

} // namespace heun
