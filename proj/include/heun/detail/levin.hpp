#ifndef HEUN_DETAIL_LEVIN_HPP
#define HEUN_DETAIL_LEVIN_HPP

#include "heun/detail/wide.hpp"
#include "heun/types.hpp"

#include <cstddef>
#include <vector>

namespace heun::detail
{

// Levin u-transform of the partial sums of sum_k term(k), with remainder estimates
// omega_k = (k+1) a_k. The transform of order k uses the first k+1 partial sums:
//
//   L_k = sum_j (-1)^j C(k,j) (j+1)^{k-1} S_j / omega_j  /  sum_j (-1)^j C(k,j) (j+1)^{k-1} / omega_j
//
// Stops once two successive changes fall below rel_tol relative to the estimate.
template <typename Term>
EvalResult levin_u_sum(Term&& term, const SeriesOptions& opts, std::size_t max_order = 80)
{
    const wide tol = opts.rel_tol;
    std::vector<wide> partial;
    std::vector<wide> omega;
    wide sum = 0;
    wide previous = 0;
    wide previous_change = -1;
    wide best_change = -1;
    wide best = 0;
    EvalResult out;
    const std::size_t limit = std::min(max_order, opts.max_terms);

    for (std::size_t k = 0; k < limit; ++k) {
        const wide a = term(k);
        sum += a;
        partial.push_back(sum);
        if (a == 0) {
            // the series has terminated (or hit an exact zero term): the partial sum is exact
            // as long as all later terms vanish too, which callers guarantee for terminating series
            out.value = static_cast<double>(sum);
            out.terms_used = k + 1;
            out.converged = true;
            out.error_estimate = 0.0;
            return out;
        }
        omega.push_back(static_cast<wide>(k + 1) * a);

        wide num = 0;
        wide den = 0;
        wide binom = 1;
        for (std::size_t j = 0; j <= k; ++j) {
            const wide weight = binom * wpow(static_cast<wide>(j + 1) / static_cast<wide>(k + 1), k == 0 ? 0U : static_cast<unsigned>(k - 1)) / omega[j];
            const wide signed_weight = (j % 2 == 0) ? weight : -weight;
            num += signed_weight * partial[j];
            den += signed_weight;
            binom = binom * static_cast<wide>(k - j) / static_cast<wide>(j + 1);
        }
        const wide estimate = num / den;
        out.terms_used = k + 1;
        if (k > 0) {
            const wide change = wabs(estimate - previous);
            if (best_change < 0 || change < best_change) {
                best_change = change;
                best = estimate;
            }
            if (previous_change >= 0 && change <= tol * wabs(estimate) && previous_change <= tol * wabs(estimate)) {
                out.value = static_cast<double>(estimate);
                out.converged = true;
                out.error_estimate = static_cast<double>(change);
                return out;
            }
            previous_change = change;
        }
        previous = estimate;
    }
    out.value = static_cast<double>(best_change < 0 ? previous : best);
    out.converged = false;
    out.error_estimate = static_cast<double>(best_change < 0 ? wabs(previous) : best_change);
    return out;
}

} // namespace heun::detail

#endif
