#include "heun/verify.hpp"
#include "heun/closed_forms.hpp"
#include "heun/coincidence.hpp"
#include "heun/hypergeom.hpp"
#include "heun/series.hpp"
#include "heun/types.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace heun
{

// ---------------------------------------------------------------------------------
// identities

namespace
{

// Binomial number `index` of an identity with its arguments (top, bottom), after the
// optional mutation. A negative top makes the coefficient 0.
ExactInteger binom(std::size_t index, std::int64_t top, std::int64_t bottom,
                   const std::optional<BinomialMutation>& mutation)
{
    if (mutation && mutation->binomial == index) {
        if (mutation->arg == BinomialMutation::Arg::top) {
            top += mutation->delta;
        } else {
            bottom += mutation->delta;
        }
    }
    return binomial_exact(top, bottom);
}

} // namespace

IdentityCheck<ExactInteger> check_identity_A(int n, int k, const std::optional<BinomialMutation>& mutation)
{
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("check_identity_A: need 0 <= k <= n");
    }
    IdentityCheck<ExactInteger> out;
    out.lhs = 0;
    for (int j = k; j <= n; ++j) {
        out.lhs += binom(0, j, k, mutation) * binom(1, 2 * j, j, mutation) * binom(2, 2 * n - 2 * j, n - j, mutation);
    }
    out.rhs = (ExactInteger(1) << (2 * (n - k))) * binom(3, n, k, mutation) * binom(4, 2 * k, k, mutation);
    out.passed = out.lhs == out.rhs;
    return out;
}

IdentityCheck<ExactRational> check_identity_B(int n, int j, const std::optional<BinomialMutation>& mutation)
{
    if (n < 0 || j < 0 || j > n) {
        throw DomainError("check_identity_B: need 0 <= j <= n");
    }
    IdentityCheck<ExactRational> out;
    out.lhs = 0;
    for (int i = 0; i <= n - j; ++i) {
        const ExactRational term =
            power_of_four(-i) * ExactRational(binom(0, n - j, i, mutation) * binom(1, 2 * i + 2 * j, i + j, mutation));
        if (i % 2 == 1) {
            out.lhs -= term;
        } else {
            out.lhs += term;
        }
    }
    const ExactInteger divisor = binom(4, n, j, mutation);
    if (divisor == 0) {
        out.rhs = 0;
        out.passed = false;
        return out;
    }
    out.rhs = power_of_four(j - n) *
              ExactRational(binom(2, 2 * j, j, mutation) * binom(3, 2 * n - 2 * j, n - j, mutation), divisor);
    out.passed = out.lhs == out.rhs;
    return out;
}

namespace
{

template <typename Check>
IdentitySweep sweep(int max_n, Check&& check)
{
    IdentitySweep out;
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            ++out.checked;
            if (!check(n, k)) {
                ++out.failures;
                out.passed = false;
                if (!out.first_failure) {
                    out.first_failure = std::make_pair(n, k);
                }
            }
        }
    }
    return out;
}

} // namespace

IdentitySweep sweep_identity_A(int max_n, const std::optional<BinomialMutation>& mutation)
{
    return sweep(max_n, [&](int n, int k) { return check_identity_A(n, k, mutation).passed; });
}

IdentitySweep sweep_identity_B(int max_n, const std::optional<BinomialMutation>& mutation)
{
    return sweep(max_n, [&](int n, int j) { return check_identity_B(n, j, mutation).passed; });
}

// ---------------------------------------------------------------------------------
// relations

std::string_view to_string(RelationId id) noexcept
{
    switch (id) {
    case RelationId::rel_2_3: return "rel_2_3";
    case RelationId::rel_2_4: return "rel_2_4";
    case RelationId::rel_2_5: return "rel_2_5";
    case RelationId::rel_2_6: return "rel_2_6";
    case RelationId::rel_5_1: return "rel_5_1";
    case RelationId::rel_4_1: return "rel_4_1";
    case RelationId::rel_4_2: return "rel_4_2";
    case RelationId::rel_4_3: return "rel_4_3";
    case RelationId::rel_1_9: return "rel_1_9";
    case RelationId::rel_5_2: return "rel_5_2";
    case RelationId::rel_4_1_eq_4_2: return "rel_4_1_eq_4_2";
    }
    return "?";
}

RelationId parse_relation(std::string_view name)
{
    for (const RelationId id : all_relations) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw UnknownRelation("unknown relation id: " + std::string(name));
}

double RelationPoint::get(std::string_view name) const
{
    for (const auto& [key, value] : params) {
        if (key == name) {
            return value;
        }
    }
    throw std::out_of_range("RelationPoint: missing parameter " + std::string(name));
}

std::pair<double, double> resolve_parameter_pair(double sum, double product)
{
    const double disc = std::max(0.0, sum * sum - 4.0 * product);
    const double root = std::sqrt(disc);
    // avoid cancellation in the smaller-magnitude root
    const double big = 0.5 * (sum + std::copysign(root, sum));
    if (big == 0.0) {
        return {0.0, 0.0};
    }
    const double small = product / big;
    return big >= small ? std::make_pair(big, small) : std::make_pair(small, big);
}

namespace
{

double heun_derivative(const GeneralHeunParams& p, double x) { return heun_local_jet(p, x).first; }

double heun_value(const GeneralHeunParams& p, double x) { return eval_heun_local(p, x).value; }

RelationSides general_derivative_relation(RelationId id, const RelationPoint& pt)
{
    const double a = pt.get("a");
    const double al = pt.get("alpha");
    const double be = pt.get("beta");
    const double g = pt.get("gamma");
    const double d = pt.get("delta");
    const double x = pt.x;
    const GeneralHeunParams base(a, a * al * be, al, be, g, d);
    const double eps = base.epsilon();
    const double lhs = heun_derivative(base, x);
    const double front = al * be / g;

    if (id == RelationId::rel_2_4) {
        const auto [a2, b2] = resolve_parameter_pair(g + d - eps + 1.0, al * be + (g + d) * (1.0 - eps));
        const double q2 = a * (al * be + g + d) - g * eps;
        const GeneralHeunParams next(a, q2, a2, b2, g + 1.0, d + 1.0);
        return {lhs, front * std::pow(1.0 - x / a, -eps) * heun_value(next, x)};
    }
    double a1 = al + 2.0;
    double b1 = be + 2.0;
    if (id == RelationId::rel_2_3) {
        std::tie(a1, b1) = resolve_parameter_pair(g + d + eps + 3.0, al * be + 2.0 * (g + d + eps + 1.0));
    }
    const double q1 = a * (al * be + g + d) + g + eps + 1.0;
    const GeneralHeunParams next(a, q1, a1, b1, g + 1.0, d + 1.0);
    return {lhs, front * (1.0 - x / a) * heun_value(next, x)};
}

RelationSides special_derivative_relation(RelationId id, const RelationPoint& pt)
{
    const double al = pt.get("alpha");
    const double be = pt.get("beta");
    const double g = pt.get("gamma");
    const double x = pt.x;
    const GeneralHeunParams base(0.5, 0.5 * al * be, al, be, g, g);
    const double lhs = heun_derivative(base, x);
    const double front = al * be / g;
    if (id == RelationId::rel_2_5) {
        const GeneralHeunParams next(0.5, 0.5 * (al + 2.0) * (be + 2.0), al + 2.0, be + 2.0, g + 1.0, g + 1.0);
        return {lhs, front * (1.0 - 2.0 * x) * heun_value(next, x)};
    }
    const double a2 = 2.0 * g - al;
    const double b2 = 2.0 * g - be;
    const GeneralHeunParams next(0.5, 0.5 * a2 * b2, a2, b2, g + 1.0, g + 1.0);
    return {lhs, front * std::pow(1.0 - 2.0 * x, 2.0 * g - al - be - 1.0) * heun_value(next, x)};
}

RelationSides confluent_relation(RelationId id, const RelationPoint& pt)
{
    const double p = pt.get("p");
    const double g = pt.get("gamma");
    const double al = pt.get("alpha");
    const double x = pt.x;
    const double sigma = 4.0 * p * al;
    const ConfluentHeunParams raised(p, g + 1.0, 0.0, al + 1.0, 4.0 * p * (al + 1.0));
    const ConfluentHeunParams shifted(p, g + 1.0, 2.0, al + 2.0, 4.0 * p * (al + 1.0) - g - 1.0);
    if (id == RelationId::rel_4_1_eq_4_2) {
        return {eval_confluent_heun(raised, x).value, (1.0 - x) * eval_confluent_heun(shifted, x).value};
    }
    const double lhs = confluent_heun_jet(ConfluentHeunParams(p, g, 0.0, al, sigma), x).first;
    if (id == RelationId::rel_4_1) {
        return {lhs, -sigma / g * eval_confluent_heun(raised, x).value};
    }
    return {lhs, sigma / g * (x - 1.0) * eval_confluent_heun(shifted, x).value};
}

RelationSides poisson_relation(const RelationPoint& pt)
{
    const double nd = pt.get("n");
    const int n = static_cast<int>(nd);
    const double x = pt.x;
    const ConfluentHeunParams hc(nd, 2.0, 2.0, 2.5, 6.0 * nd - 2.0);
    return {eval_confluent_heun(hc, x).value, eval_K_derivative(n, 1, x) / (2.0 * nd * (x - 1.0))};
}

RelationSides homotopy_relation(const RelationPoint& pt)
{
    const GeneralHeunParams params(pt.get("a"), pt.get("q"), pt.get("alpha"), pt.get("beta"), pt.get("gamma"),
                                   pt.get("delta"));
    const HomotopyTransform t = transform_homotopy(params);
    const double x = pt.x;
    return {heun_value(params, x), std::pow(1.0 - x / params.a(), t.exponent) * heun_value(t.transformed, x)};
}

RelationSides gauss_increment_relation(const RelationPoint& pt)
{
    const double a = pt.get("a");
    const double b = pt.get("b");
    const double c = pt.get("c");
    const auto m = static_cast<unsigned>(pt.get("m"));
    const double x = pt.x;
    const double s = a + m - 1.0;
    const std::vector<double> f = gauss_2f1_derivatives(Gauss2F1Params(a, b, c), x, m);

    // Leibniz: D^m[(1-x)^s F] = sum_i C(m,i) D^i[(1-x)^s] F^{(m-i)},
    // D^i (1-x)^s = (-1)^i s(s-1)...(s-i+1) (1-x)^{s-i}
    double derivative = 0.0;
    double falling = 1.0;
    double binom_mi = 1.0;
    for (unsigned i = 0; i <= m; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        derivative += binom_mi * sign * falling * std::pow(1.0 - x, s - i) * f[m - i];
        falling *= s - i;
        binom_mi = binom_mi * (m - i) / (i + 1.0);
    }
    const double lhs = std::pow(1.0 - x, 1.0 - a) * derivative;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double front = sign * pochhammer(a, m) * pochhammer(c - b, m) / pochhammer(c, m);
    return {lhs, front * gauss_2f1(Gauss2F1Params(a + m, b, c + m), x).value};
}

// splitmix64; fully specified so that sampled points are identical on every platform
std::uint64_t next_bits(std::uint64_t& state)
{
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform(std::uint64_t& state, double lo, double hi)
{
    const double unit = static_cast<double>(next_bits(state) >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

int uniform_int(std::uint64_t& state, int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next_bits(state) % span);
}

} // namespace

RelationSides evaluate_relation(RelationId id, const RelationPoint& point)
{
    switch (id) {
    case RelationId::rel_2_3:
    case RelationId::rel_2_4:
    case RelationId::rel_5_1: return general_derivative_relation(id, point);
    case RelationId::rel_2_5:
    case RelationId::rel_2_6: return special_derivative_relation(id, point);
    case RelationId::rel_4_1:
    case RelationId::rel_4_2:
    case RelationId::rel_4_1_eq_4_2: return confluent_relation(id, point);
    case RelationId::rel_4_3: return poisson_relation(point);
    case RelationId::rel_1_9: return homotopy_relation(point);
    case RelationId::rel_5_2: return gauss_increment_relation(point);
    }
    throw UnknownRelation("unknown relation id");
}

RelationPoint sample_relation_point(RelationId id, std::uint64_t& state)
{
    RelationPoint pt;
    auto add = [&](const char* name, double v) { pt.params.emplace_back(name, v); };
    switch (id) {
    case RelationId::rel_2_3:
    case RelationId::rel_2_4:
    case RelationId::rel_5_1:
    case RelationId::rel_1_9: {
        const double a = uniform(state, 0.3, 0.7);
        add("a", a);
        if (id == RelationId::rel_1_9) {
            add("q", uniform(state, -3.0, 3.0));
        }
        add("alpha", uniform(state, -3.0, 3.0));
        add("beta", uniform(state, -3.0, 3.0));
        add("gamma", uniform(state, 0.5, 3.0));
        add("delta", uniform(state, 0.5, 3.0));
        pt.x = uniform(state, 0.0, 0.45 * std::min(1.0, a));
        break;
    }
    case RelationId::rel_2_5:
    case RelationId::rel_2_6:
        add("alpha", uniform(state, -3.0, 3.0));
        add("beta", uniform(state, -3.0, 3.0));
        add("gamma", uniform(state, 0.5, 3.0));
        pt.x = uniform(state, 0.0, 0.45 * 0.5);
        break;
    case RelationId::rel_4_1:
    case RelationId::rel_4_2:
    case RelationId::rel_4_1_eq_4_2:
        add("p", uniform(state, 0.25, 2.0));
        add("gamma", uniform(state, 0.5, 3.0));
        add("alpha", uniform(state, -3.0, 3.0));
        pt.x = uniform(state, 0.0, 0.45);
        break;
    case RelationId::rel_4_3:
        add("n", uniform_int(state, 1, 10));
        pt.x = uniform(state, 0.0, 0.45);
        break;
    case RelationId::rel_5_2:
        add("a", uniform(state, -3.0, 3.0));
        add("b", uniform(state, -3.0, 3.0));
        add("c", uniform(state, 0.5, 3.0));
        add("m", uniform_int(state, 1, 2));
        pt.x = uniform(state, 0.0, 0.45);
        break;
    }
    return pt;
}

RelationReport check_relation(RelationId id, std::size_t trials, double tol, std::uint64_t seed)
{
    if (trials == 0) {
        throw DomainError("check_relation: trials must be positive");
    }
    if (!(tol > 0.0)) {
        throw DomainError("check_relation: tol must be positive");
    }
    RelationReport report;
    report.id = id;
    report.trials = trials;
    report.tol = tol;
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(id) + 1));
    bool first = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const RelationPoint pt = sample_relation_point(id, state);
        double residual = std::numeric_limits<double>::infinity();
        try {
            const RelationSides sides = evaluate_relation(id, pt);
            residual = std::abs(sides.lhs - sides.rhs);
            if (std::isnan(residual)) {
                residual = std::numeric_limits<double>::infinity();
            }
        } catch (const std::exception&) {
            // stays infinite
        }
        if (first || residual > report.worst_residual) {
            report.worst_residual = residual;
            report.worst_point = pt;
            first = false;
        }
    }
    report.passed = report.worst_residual <= tol;
    return report;
}

} // namespace heun
