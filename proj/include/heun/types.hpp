#ifndef HEUN_TYPES_HPP
#define HEUN_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heun
{

/// Thrown when an argument lies outside the domain where a quantity is defined
/// (or where the chosen algorithm is allowed to evaluate it).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Thrown when a closed form is evaluated at one of its poles.
class PoleError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Thrown when an infinite series is asked for at parameters where it diverges.
class DivergentSeries : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class UnknownRelation : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct SeriesOptions
{
    std::size_t max_terms = 10000;
    double rel_tol = 1e-15;

    // Throws DomainError unless max_terms >= 2 and 0 < rel_tol < 1.
    void validate() const;
};

/// Outcome of a truncated series or quadrature. A non-converged result is not an
/// error; its error_estimate is the magnitude of the last term that was added.
struct EvalResult
{
    double value = 0.0;
    std::size_t terms_used = 0;
    bool converged = false;
    double error_estimate = 0.0;
};

// True when v is 0, -1, -2, ... (within exact floating equality).
bool is_nonpositive_integer(double v) noexcept;

} // namespace heun

#endif
