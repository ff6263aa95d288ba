#ifndef HEUN_VERIFY_HPP
#define HEUN_VERIFY_HPP

#include "heun/exact.hpp"
#include "heun/types.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heun
{

// ---------------------------------------------------------------------------------
// Exact combinatorial identities
//
//   (A)  sum_{j=k}^{n} C(j,k) C(2j,j) C(2n-2j,n-j) = 4^{n-k} C(n,k) C(2k,k)
//   (B)  sum_{i=0}^{n-j} (-1/4)^i C(n-j,i) C(2i+2j,i+j) = 4^{j-n} C(2j,j) C(2n-2j,n-j) / C(n,j)
// ---------------------------------------------------------------------------------

/// Shifts one argument of one binomial coefficient of an identity. Binomials are
/// numbered left to right as written above: for A, 0..2 on the left and 3..4 on the
/// right; for B, 0..1 on the left and 2..4 on the right.
struct BinomialMutation
{
    enum class Arg
    {
        top,
        bottom,
    };

    std::size_t binomial = 0;
    Arg arg = Arg::top;
    int delta = 1;
};

inline constexpr std::size_t identity_binomial_count = 5;

template <typename T>
struct IdentityCheck
{
    bool passed = false;
    T lhs;
    T rhs;
};

IdentityCheck<ExactInteger> check_identity_A(int n, int k, const std::optional<BinomialMutation>& mutation = std::nullopt);

/// When a mutation makes C(n,j) vanish the right side is undefined: the check fails and
/// rhs is reported as 0.
IdentityCheck<ExactRational> check_identity_B(int n, int j, const std::optional<BinomialMutation>& mutation = std::nullopt);

struct IdentitySweep
{
    bool passed = true;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<std::pair<int, int>> first_failure;
};

/// Runs the identity over every 0 <= k <= n <= max_n.
IdentitySweep sweep_identity_A(int max_n, const std::optional<BinomialMutation>& mutation = std::nullopt);
IdentitySweep sweep_identity_B(int max_n, const std::optional<BinomialMutation>& mutation = std::nullopt);

// ---------------------------------------------------------------------------------
// Functional relations between Heun, confluent Heun and hypergeometric functions
// ---------------------------------------------------------------------------------

enum class RelationId
{
    rel_2_3,        // d/dx Hl(a, a alpha beta; ...) = (alpha beta/gamma)(1 - x/a) Hl(a, q1; alpha1, beta1; gamma+1, delta+1)
    rel_2_4,        // same derivative with (1 - x/a)^{-epsilon} Hl(a, q2; alpha2, beta2; gamma+1, delta+1)
    rel_2_5,        // a = 1/2, delta = gamma specialisation of rel_2_3
    rel_2_6,        // a = 1/2, delta = gamma specialisation of rel_2_4
    rel_5_1,        // rel_2_3 with alpha1 = alpha+2, beta1 = beta+2 taken explicitly
    rel_4_1,        // d/dx HC(p,gamma,0,alpha,4p alpha) = -(sigma/gamma) HC(p,gamma+1,0,alpha+1,4p(alpha+1))
    rel_4_2,        // same derivative = (sigma/gamma)(x-1) HC(p,gamma+1,2,alpha+2,4p(alpha+1)-gamma-1)
    rel_4_3,        // HC(n,2,2,5/2,6n-2;x) = K_n'(x) / (2n(x-1))
    rel_1_9,        // homotopy transformation of Hl
    rel_5_2,        // (1-x)^{1-a} D^m[(1-x)^{a+m-1} 2F1(a,b;c;x)] = (-1)^m (a)_m (c-b)_m/(c)_m 2F1(a+m,b;c+m;x)
    rel_4_1_eq_4_2, // HC(p,gamma+1,0,alpha+1,4p(alpha+1)) = (1-x) HC(p,gamma+1,2,alpha+2,4p(alpha+1)-gamma-1)
};

inline constexpr std::array<RelationId, 11> all_relations{
    RelationId::rel_2_3, RelationId::rel_2_4, RelationId::rel_2_5, RelationId::rel_2_6,
    RelationId::rel_5_1, RelationId::rel_4_1, RelationId::rel_4_2, RelationId::rel_4_3,
    RelationId::rel_1_9, RelationId::rel_5_2, RelationId::rel_4_1_eq_4_2,
};

std::string_view to_string(RelationId id) noexcept;

/// Throws UnknownRelation for names that are not relation ids.
RelationId parse_relation(std::string_view name);

/// A named parameter set plus the evaluation point.
struct RelationPoint
{
    std::vector<std::pair<std::string, double>> params;
    double x = 0.0;

    /// Throws std::out_of_range when the parameter is missing.
    double get(std::string_view name) const;
};

struct RelationSides
{
    double lhs;
    double rhs;
};

/// Evaluates both sides of a relation at one point. Parameter names per relation:
///   rel_2_3, rel_2_4, rel_5_1: a, alpha, beta, gamma, delta   (q = a alpha beta)
///   rel_1_9:                   a, q, alpha, beta, gamma, delta
///   rel_2_5, rel_2_6:          alpha, beta, gamma
///   rel_4_1, rel_4_2, rel_4_1_eq_4_2: p, gamma, alpha         (sigma = 4p alpha)
///   rel_4_3:                   n
///   rel_5_2:                   a, b, c, m
RelationSides evaluate_relation(RelationId id, const RelationPoint& point);

/// Draws one parameter set and x for the relation from its documented sampling box.
/// `state` is advanced; the stream depends only on its initial value.
RelationPoint sample_relation_point(RelationId id, std::uint64_t& state);

struct RelationReport
{
    RelationId id;
    bool passed = false;
    double worst_residual = 0.0;
    RelationPoint worst_point;
    std::size_t trials = 0;
    double tol = 0.0;
};

/// Samples `trials` points (seeded, reproducible), records the worst absolute residual
/// |lhs - rhs|; passed iff worst_residual <= tol. A point whose evaluation throws
/// counts as an infinite residual.
RelationReport check_relation(RelationId id, std::size_t trials, double tol, std::uint64_t seed = 0);

/// Roots (alpha1, beta1) of t^2 - sum t + product = 0 (larger root first); the
/// discriminant is clamped at zero against rounding.
std::pair<double, double> resolve_parameter_pair(double sum, double product);

} // namespace heun

#endif
