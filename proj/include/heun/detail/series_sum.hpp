#ifndef HEUN_DETAIL_SERIES_SUM_HPP
#define HEUN_DETAIL_SERIES_SUM_HPP

#include "heun/detail/wide.hpp"
#include "heun/series.hpp"
#include "heun/types.hpp"

#include <cstddef>

namespace heun::detail
{

struct WideJet
{
    wide value = 1;
    wide first = 0;
    wide second = 0;
    std::size_t terms_used = 1;
    bool converged = false;
    wide last_term = 0;
};

inline EvalResult to_eval(const WideJet& j)
{
    return EvalResult{static_cast<double>(j.value), j.terms_used, j.converged, static_cast<double>(j.last_term)};
}

inline SeriesJet to_jet(const WideJet& j)
{
    return SeriesJet{static_cast<double>(j.value), static_cast<double>(j.first), static_cast<double>(j.second),
                     j.terms_used, j.converged, static_cast<double>(j.last_term)};
}

// Sums sum_k c[k] x^k with c[0] = 1, c[1] = c1 and c[k+1] = step(k, c[k], c[k-1]).
// Stops after three consecutive terms below opts.rel_tol relative to the partial sum;
// with want_jet the derivative series must also have settled.
template <typename Step>
WideJet sum_three_term(const Step& step, wide c1, double x_in, const SeriesOptions& opts, bool want_jet)
{
    const wide x = x_in;
    const wide tol = opts.rel_tol;
    WideJet out;

    wide prev = 1;
    wide cur = c1;
    wide pow_km2 = 0; // x^(k-2)
    wide pow_km1 = 1; // x^(k-1)
    std::size_t small_run = 0;

    for (std::size_t k = 1; k < opts.max_terms; ++k) {
        const wide pow_k = pow_km1 * x;
        const wide kw = static_cast<wide>(k);
        const wide t0 = cur * pow_k;
        out.value += t0;
        bool small = wabs(t0) <= tol * wabs(out.value);
        if (want_jet) {
            const wide t1 = kw * cur * pow_km1;
            const wide t2 = kw * (kw - 1) * cur * pow_km2;
            out.first += t1;
            out.second += t2;
            const wide scale = wabs(out.value);
            small = small && wabs(t1) <= tol * (wabs(out.first) + scale) &&
                    wabs(t2) <= tol * (wabs(out.second) + scale);
        }
        out.terms_used = k + 1;
        out.last_term = wabs(t0);
        small_run = small ? small_run + 1 : 0;
        if (small_run >= 3) {
            out.converged = true;
            break;
        }
        const wide next = step(k, cur, prev);
        prev = cur;
        cur = next;
        pow_km2 = pow_km1;
        pow_km1 = pow_k;
    }
    return out;
}

} // namespace heun::detail

#endif
