#ifndef HEUN_COINCIDENCE_HPP
#define HEUN_COINCIDENCE_HPP

#include "heun/types.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace heun
{

// Routes for the binomial index of coincidence F_n.
enum class FMethod
{
    definitional, // sum of squared binomial probabilities
    factored,     // sum C(n,k) C(2k,k) (x^2-x)^k
    power,        // even powers of (1-2x) with alternating inner sums
    established,  // sum (1-2x)^{2j} 4^{-n} C(2j,j) C(2n-2j,n-j)
    expanded,     // powers of (x^2-x) with sums of binomial triple products
};

// Routes for the negative-binomial index of coincidence G_n.
enum class GMethod
{
    definitional, // infinite sum of squared negative-binomial probabilities
    factored,     // (1+2x)^{1-2n} sum C(n-1,k) C(2k,k) (x^2+x)^k
    power,        // odd powers of (1+2x) with alternating inner sums
    established,  // sum (1+2x)^{2j-2n+1} 4^{1-n} C(2n-2j-2,n-j-1) C(2j,j)
};

enum class EntropyKind
{
    renyi,
    tsallis,
};

inline constexpr std::array<FMethod, 5> all_f_methods{FMethod::definitional, FMethod::factored, FMethod::power,
                                                      FMethod::established, FMethod::expanded};
inline constexpr std::array<GMethod, 4> all_g_methods{GMethod::definitional, GMethod::factored, GMethod::power,
                                                      GMethod::established};

std::string_view to_string(FMethod m) noexcept;
std::string_view to_string(GMethod m) noexcept;
std::string_view to_string(EntropyKind k) noexcept;
std::optional<FMethod> parse_f_method(std::string_view name) noexcept;
std::optional<GMethod> parse_g_method(std::string_view name) noexcept;
std::optional<EntropyKind> parse_entropy_kind(std::string_view name) noexcept;

/// F_n(x) = sum_k (C(n,k) x^k (1-x)^{n-k})^2. The definitional route needs x in [0, 1];
/// the closed forms are polynomials and accept any real x.
double eval_F(int n, double x, FMethod method);

/// G_n(x) = sum_k (C(n+k-1,k) x^k (1+x)^{-n-k})^2. The definitional route needs x >= 0
/// and reports the geometric tail bound in error_estimate; the closed forms throw
/// PoleError at x = -1/2.
EvalResult eval_G(int n, double x, GMethod method, const SeriesOptions& opts = {});

/// K_n(x) = sum_k (e^{-nx} (nx)^k / k!)^2 for x >= 0, truncated no earlier than
/// max(50, ceil(4nx) + 40) and not before the remaining tail is below rel_tol.
EvalResult eval_K(int n, double x, const SeriesOptions& opts = {});

/// j-th derivative of K_n from
///
///   K_n^(j)(x) = (2/pi) (-4n)^j int_0^{pi/2} sin(t)^{2j} exp(-4nx sin(t)^2) dt
///
/// by Gauss-Legendre quadrature. The 128-point value is returned; error_estimate is its
/// distance from the 64-point value.
EvalResult eval_K_derivative_quadrature(int n, int j, double x);
double eval_K_derivative(int n, int j, double x);

/// HC(n, j+1, 0, j+1/2, 2n(2j+1); x) = (-n)^{-j} C(2j,j)^{-1} K_n^(j)(x).
double eval_HC_family(int n, int j, double x);

/// Order-2 entropy from an index of coincidence s: Renyi -log s, Tsallis 1 - s.
double entropy(double s, EntropyKind kind);

} // namespace heun

#endif
