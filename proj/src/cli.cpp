#include "heun/cli.hpp"
#include "heun/closed_forms.hpp"
#include "heun/coincidence.hpp"
#include "heun/hypergeom.hpp"
#include "heun/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

namespace heun::cli
{

namespace
{

class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

double parse_double(std::string_view s)
{
    const std::string text(s);
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw UsageError("not a finite number: '" + text + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

} // namespace

std::vector<double> parse_grid(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw UsageError("grid must be start:stop:step");
    }
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0)) {
        throw UsageError("grid step must be positive");
    }
    if (!(start <= stop)) {
        throw UsageError("grid start must not exceed stop");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        points.push_back(start + static_cast<double>(i) * step);
    }
    return points;
}

std::vector<double> parse_points(std::string_view text)
{
    std::vector<double> points;
    for (const auto part : split(text, ',')) {
        points.push_back(parse_double(part));
    }
    return points;
}

IdentityMutation parse_mutation(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 4 || (parts[0] != "A" && parts[0] != "B")) {
        throw UsageError("mutation must be A|B:<binomial 0-4>:<top|bottom>:<delta>");
    }
    IdentityMutation m;
    m.identity = parts[0][0];
    int index = -1;
    const auto [p1, e1] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), index);
    if (e1 != std::errc{} || p1 != parts[1].data() + parts[1].size() || index < 0 ||
        index >= static_cast<int>(identity_binomial_count)) {
        throw UsageError("mutation binomial index must be 0-4");
    }
    m.mutation.binomial = static_cast<std::size_t>(index);
    if (parts[2] == "top") {
        m.mutation.arg = BinomialMutation::Arg::top;
    } else if (parts[2] == "bottom") {
        m.mutation.arg = BinomialMutation::Arg::bottom;
    } else {
        throw UsageError("mutation argument must be top or bottom");
    }
    std::string_view delta = parts[3];
    if (!delta.empty() && delta.front() == '+') {
        delta.remove_prefix(1);
    }
    const auto [p3, e3] = std::from_chars(delta.data(), delta.data() + delta.size(), m.mutation.delta);
    if (e3 != std::errc{} || p3 != delta.data() + delta.size() || m.mutation.delta == 0) {
        throw UsageError("mutation delta must be a nonzero integer");
    }
    return m;
}

namespace
{

struct Options
{
    std::string target;
    std::string method;
    std::string grid;
    std::string points;
    std::string output;
    std::string out_path;
    std::string kind = "renyi";
    std::string mutate;
    std::string relations;

    std::optional<double> x, s;
    std::optional<double> a, q, alpha, beta, gamma, delta, p, sigma, theta, b, c, a1, a2, a3, b1, b2;
    std::optional<int> n, j, i, m, k;

    std::size_t max_terms = 10000;
    double rel_tol = 1e-15;
    int max_n = 50;
    std::size_t trials = 100;
    std::optional<double> tol;
    std::uint64_t seed = 0;

    SeriesOptions series() const { return SeriesOptions{max_terms, rel_tol}; }
};

template <typename T>
T need(const std::optional<T>& v, const char* name)
{
    if (!v) {
        throw UsageError(std::string("missing required parameter --") + name);
    }
    return *v;
}

struct Route
{
    std::string name;
    std::function<EvalResult(double)> eval;
};

EvalResult exact_value(double v) { return EvalResult{v, 1, true, 0.0}; }

std::vector<Route> routes_for(const Options& o)
{
    const std::string& t = o.target;
    const SeriesOptions so = o.series();
    std::vector<Route> routes;

    if (t == "heun") {
        const GeneralHeunParams hp(need(o.a, "a"), need(o.q, "q"), need(o.alpha, "alpha"), need(o.beta, "beta"),
                                   need(o.gamma, "gamma"), need(o.delta, "delta"));
        routes.push_back({"series", [hp, so](double x) { return eval_heun_local(hp, x, so); }});
        routes.push_back({"transform", [hp, so](double x) {
                              const HomotopyTransform tr = transform_homotopy(hp);
                              EvalResult r = eval_heun_local(tr.transformed, x, so);
                              const double front = std::pow(1.0 - x / hp.a(), tr.exponent);
                              r.value *= front;
                              r.error_estimate *= std::abs(front);
                              return r;
                          }});
    } else if (t == "confluent") {
        const ConfluentHeunParams cp(need(o.p, "p"), need(o.gamma, "gamma"), need(o.delta, "delta"),
                                     need(o.alpha, "alpha"), need(o.sigma, "sigma"));
        routes.push_back({"series", [cp, so](double x) { return eval_confluent_heun(cp, x, so); }});
    } else if (t == "F") {
        const int n = need(o.n, "n");
        for (const FMethod fm : all_f_methods) {
            routes.push_back({std::string(to_string(fm)), [n, fm](double x) { return exact_value(eval_F(n, x, fm)); }});
        }
    } else if (t == "G") {
        const int n = need(o.n, "n");
        for (const GMethod gm : all_g_methods) {
            routes.push_back({std::string(to_string(gm)), [n, gm, so](double x) { return eval_G(n, x, gm, so); }});
        }
    } else if (t == "K") {
        const int n = need(o.n, "n");
        routes.push_back({"definitional", [n, so](double x) { return eval_K(n, x, so); }});
        routes.push_back({"series", [n, so](double x) {
                              return eval_confluent_heun(ConfluentHeunParams(n, 1.0, 0.0, 0.5, 2.0 * n), x, so);
                          }});
        routes.push_back({"quadrature", [n](double x) { return eval_K_derivative_quadrature(n, 0, x); }});
    } else if (t == "Kderiv") {
        const int n = need(o.n, "n");
        const int j = need(o.j, "j");
        routes.push_back({"quadrature", [n, j](double x) { return eval_K_derivative_quadrature(n, j, x); }});
        routes.push_back({"series", [n, j, so](double x) {
                              const double scale = std::pow(-static_cast<double>(n), j) *
                                                   to_double(ExactRational(binomial_exact(2 * j, j)));
                              EvalResult r = eval_confluent_heun(
                                  ConfluentHeunParams(n, j + 1.0, 0.0, j + 0.5, 2.0 * n * (2.0 * j + 1.0)), x, so);
                              r.value *= scale;
                              r.error_estimate *= std::abs(scale);
                              return r;
                          }});
    } else if (t == "2f1") {
        const Gauss2F1Params gp(need(o.a, "a"), need(o.b, "b"), need(o.c, "c"));
        routes.push_back({"series", [gp, so](double x) { return gauss_2f1(gp, x, so); }});
        const double twice_k = gp.c - gp.a - 1.0;
        if (gp.b == 1.0 && gp.a >= 1.0 && std::floor(gp.a) == gp.a && twice_k >= 0.0 &&
            std::floor(twice_k / 2.0) * 2.0 == twice_k) {
            const auto m = static_cast<unsigned>(gp.a);
            const auto k = static_cast<unsigned>(twice_k / 2.0);
            routes.push_back({"closed", [m, k](double x) { return exact_value(gauss_2f1_closed(m, k, x)); }});
        }
    } else if (t == "3f2") {
        const Clausen3F2Params cp(need(o.a1, "a1"), need(o.a2, "a2"), need(o.a3, "a3"), need(o.b1, "b1"),
                                  need(o.b2, "b2"));
        routes.push_back({"levin", [cp, so](double) { return clausen_3f2_unit(cp, so); }});
    } else if (t == "hl-hyp") {
        const double q = need(o.q, "q");
        routes.push_back({"hypergeometric", [q, so](double x) { return eval_hl_hypergeometric(q, x, so); }});
        routes.push_back({"series", [q, so](double x) {
                              return eval_heun_local(GeneralHeunParams(0.5, q, 2.0 * q, 1.0, 1.0, 1.0), x, so);
                          }});
    } else if (t == "family-neg") {
        const FamilyParamsNeg fp(need(o.n, "n"), need(o.theta, "theta"), need(o.gamma, "gamma"));
        routes.push_back({"closed", [fp](double x) { return exact_value(eval_family_negative(fp, x)); }});
        routes.push_back({"series", [fp, so](double x) { return eval_heun_local(fp.heun_params(), x, so); }});
    } else if (t == "family-pos") {
        const double g = need(o.gamma, "gamma");
        if (std::floor(g) != g) {
            throw UsageError("family-pos needs an integer --gamma");
        }
        const FamilyParamsPos fp(need(o.n, "n"), need(o.theta, "theta"), static_cast<int>(g));
        routes.push_back({"closed", [fp](double x) { return exact_value(eval_family_positive(fp, x)); }});
        routes.push_back({"series", [fp, so](double x) { return eval_heun_local(fp.heun_params(), x, so); }});
    } else if (t == "sample-family") {
        const int n = need(o.n, "n");
        const int i = need(o.i, "i");
        const GeneralHeunParams hp = sample_family_heun_params(n, i);
        routes.push_back({"closed", [n, i](double x) { return exact_value(eval_sample_family(n, i, x)); }});
        routes.push_back({"series", [hp, so](double x) { return eval_heun_local(hp, x, so); }});
    } else if (t.empty()) {
        throw UsageError("missing --target");
    } else {
        throw UsageError("unknown target '" + t + "'");
    }
    return routes;
}

const Route& select_route(const std::vector<Route>& routes, const std::string& method)
{
    if (method.empty()) {
        return routes.front();
    }
    for (const Route& r : routes) {
        if (r.name == method) {
            return r;
        }
    }
    std::string names;
    for (const Route& r : routes) {
        names += (names.empty() ? "" : ", ") + r.name;
    }
    throw UsageError("method '" + method + "' is not available for this target (available: " + names + ")");
}

std::vector<double> points_of(const Options& o, bool allow_single)
{
    const int given = (o.grid.empty() ? 0 : 1) + (o.points.empty() ? 0 : 1) + (o.x ? 1 : 0);
    if (given != 1) {
        throw UsageError(allow_single ? "give exactly one of --x, --grid, --points" : "give exactly one of --grid, --points");
    }
    if (o.x) {
        if (!allow_single) {
            throw UsageError("this command needs --grid or --points");
        }
        return {*o.x};
    }
    return o.grid.empty() ? parse_points(o.points) : parse_grid(o.grid);
}

TableFormat format_of(const Options& o)
{
    const std::string name = o.output.empty() ? "csv" : o.output;
    const auto f = parse_table_format(name);
    if (!f) {
        throw UsageError("--output must be csv or json");
    }
    return *f;
}

// Writes to --out when given, else to `out`.
template <typename Writer>
void with_sink(const Options& o, std::ostream& out, Writer&& write)
{
    if (o.out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open output file '" + o.out_path + "'");
    }
    write(file);
}

ExitReport finish_rows(const Options& o, const std::vector<TableRow>& rows, bool all_converged, std::ostream& out,
                       std::ostream& err)
{
    const TableFormat fmt = format_of(o);
    with_sink(o, out, [&](std::ostream& sink) { emit_table(rows, fmt, sink); });
    if (!all_converged) {
        err << "warning: at least one evaluation did not converge\n";
        return {numerical_failure, "non-converged evaluation"};
    }
    return {success, std::to_string(rows.size()) + " rows"};
}

ExitReport cmd_eval(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto routes = routes_for(o);
    const Route& route = select_route(routes, o.method);
    const bool pointless = o.target == "3f2";
    const std::vector<double> xs = pointless && !o.x && o.grid.empty() && o.points.empty()
                                       ? std::vector<double>{0.0}
                                       : points_of(o, true);
    if (xs.size() == 1 && o.output.empty()) {
        const EvalResult r = route.eval(xs.front());
        with_sink(o, out, [&](std::ostream& sink) { sink << format_number(r.value) << '\n'; });
        if (!r.converged) {
            err << "warning: series did not converge (error estimate " << format_number(r.error_estimate) << ")\n";
            return {numerical_failure, "non-converged evaluation"};
        }
        return {success, format_number(r.value)};
    }
    std::vector<TableRow> rows;
    bool converged = true;
    for (const double x : xs) {
        const EvalResult r = route.eval(x);
        converged = converged && r.converged;
        rows.push_back({x, r.value, r.error_estimate, route.name});
    }
    return finish_rows(o, rows, converged, out, err);
}

ExitReport cmd_table(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto routes = routes_for(o);
    const Route& route = select_route(routes, o.method);
    std::vector<TableRow> rows;
    bool converged = true;
    for (const double x : points_of(o, false)) {
        const EvalResult r = route.eval(x);
        converged = converged && r.converged;
        rows.push_back({x, r.value, r.error_estimate, route.name});
    }
    return finish_rows(o, rows, converged, out, err);
}

ExitReport cmd_entropy(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto kind = parse_entropy_kind(o.kind);
    if (!kind) {
        throw UsageError("--kind must be renyi or tsallis");
    }
    if (o.s) {
        const double v = entropy(*o.s, *kind);
        with_sink(o, out, [&](std::ostream& sink) { sink << format_number(v) << '\n'; });
        return {success, format_number(v)};
    }
    if (o.target != "F" && o.target != "G" && o.target != "K") {
        throw UsageError("entropy needs --s or --target F|G|K");
    }
    const auto routes = routes_for(o);
    const Route& route = select_route(routes, o.method);
    const std::vector<double> xs = points_of(o, true);
    std::vector<TableRow> rows;
    bool converged = true;
    for (const double x : xs) {
        const EvalResult r = route.eval(x);
        converged = converged && r.converged;
        const double v = entropy(r.value, *kind);
        const double e = *kind == EntropyKind::renyi ? r.error_estimate / r.value : r.error_estimate;
        rows.push_back({x, v, e, std::string(to_string(*kind)) + ":" + route.name});
    }
    if (rows.size() == 1 && o.output.empty()) {
        with_sink(o, out, [&](std::ostream& sink) { sink << format_number(rows.front().value) << '\n'; });
        return converged ? ExitReport{success, format_number(rows.front().value)}
                         : ExitReport{numerical_failure, "non-converged evaluation"};
    }
    return finish_rows(o, rows, converged, out, err);
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

ExitReport cmd_verify(const Options& o, std::ostream& out, std::ostream&)
{
    if (o.max_n < 0) {
        throw UsageError("--max-n must be nonnegative");
    }
    std::optional<IdentityMutation> mutation;
    if (!o.mutate.empty()) {
        mutation = parse_mutation(o.mutate);
    }
    std::vector<RelationId> relations;
    if (o.relations.empty()) {
        relations.assign(all_relations.begin(), all_relations.end());
    } else if (o.relations != "none") {
        for (const auto name : split(o.relations, ',')) {
            relations.push_back(parse_relation(name));
        }
    }
    const double tol = o.tol.value_or(1e-7);
    bool all_passed = true;

    std::ostringstream text;
    for (const char which : {'A', 'B'}) {
        std::optional<BinomialMutation> m;
        if (mutation && mutation->identity == which) {
            m = mutation->mutation;
        }
        const IdentitySweep sweep = which == 'A' ? sweep_identity_A(o.max_n, m) : sweep_identity_B(o.max_n, m);
        all_passed = all_passed && sweep.passed;
        text << "identity_" << which << " max_n=" << o.max_n << " checked=" << sweep.checked
             << " failures=" << sweep.failures;
        if (sweep.first_failure) {
            text << " first_failure=(" << sweep.first_failure->first << "," << sweep.first_failure->second << ")";
        }
        text << (sweep.passed ? " PASS" : " FAIL") << '\n';
    }
    for (const RelationId id : relations) {
        const RelationReport r = check_relation(id, o.trials, tol, o.seed);
        all_passed = all_passed && r.passed;
        text << to_string(id) << " trials=" << r.trials << " worst_residual=" << sci(r.worst_residual)
             << " tol=" << sci(tol) << " at x=" << format_number(r.worst_point.x);
        for (const auto& [key, value] : r.worst_point.params) {
            text << ' ' << key << '=' << format_number(value);
        }
        text << (r.passed ? " PASS" : " FAIL") << '\n';
    }
    text << "verify: " << (all_passed ? "PASS" : "FAIL") << '\n';
    with_sink(o, out, [&](std::ostream& sink) { sink << text.str(); });
    return all_passed ? ExitReport{success, "all checks passed"} : ExitReport{verification_failure, "verification failed"};
}

ExitReport cmd_crosscheck(const Options& o, std::ostream& out, std::ostream&)
{
    const auto routes = routes_for(o);
    if (routes.size() < 2) {
        throw UsageError("target '" + o.target + "' has a single evaluation route; nothing to cross-check");
    }
    const std::vector<double> xs = points_of(o, true);
    const double tol = o.tol.value_or(1e-8);

    struct Worst
    {
        double abs = 0.0;
        double scaled = 0.0;
        double x = std::numeric_limits<double>::quiet_NaN();
        std::size_t compared = 0;
    };
    std::vector<Worst> worst(routes.size());
    bool numerical_trouble = false;
    for (const double x : xs) {
        std::vector<std::optional<double>> values(routes.size());
        for (std::size_t r = 0; r < routes.size(); ++r) {
            try {
                const EvalResult res = routes[r].eval(x);
                if (!res.converged) {
                    numerical_trouble = true;
                }
                values[r] = res.value;
            } catch (const DomainError&) {
                // route not applicable at this point
            } catch (const PoleError&) {
            }
        }
        // reference: first route with a value at this point
        const auto ref = std::find_if(values.begin(), values.end(), [](const auto& v) { return v.has_value(); });
        if (ref == values.end()) {
            continue;
        }
        for (std::size_t r = 0; r < routes.size(); ++r) {
            if (!values[r] || &values[r] == &*ref) {
                continue;
            }
            const double a = **ref;
            const double b = *values[r];
            const double diff = std::abs(a - b);
            const double scaled = diff / std::max({1.0, std::abs(a), std::abs(b)});
            Worst& w = worst[r];
            ++w.compared;
            if (std::isnan(diff) || scaled > w.scaled || std::isnan(w.x)) {
                w.abs = diff;
                w.scaled = std::isnan(diff) ? std::numeric_limits<double>::infinity() : scaled;
                w.x = x;
            }
        }
    }

    std::ostringstream text;
    double overall = 0.0;
    for (std::size_t r = 1; r < routes.size(); ++r) {
        const Worst& w = worst[r];
        text << routes[r].name << " vs reference: compared=" << w.compared << " max_abs=" << sci(w.abs)
             << " max_scaled=" << sci(w.scaled);
        if (w.compared > 0) {
            text << " at x=" << format_number(w.x);
        }
        text << '\n';
        overall = std::max(overall, w.scaled);
    }
    const bool passed = overall <= tol;
    text << "crosscheck " << o.target << " reference=" << routes.front().name << " max_discrepancy=" << sci(overall)
         << " tol=" << sci(tol) << (passed ? " PASS" : " FAIL") << '\n';
    with_sink(o, out, [&](std::ostream& sink) { sink << text.str(); });
    if (numerical_trouble) {
        return {numerical_failure, "non-converged evaluation"};
    }
    return passed ? ExitReport{success, "routes agree"} : ExitReport{verification_failure, "routes disagree"};
}

void add_function_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--target", o.target,
                    "heun | confluent | F | G | K | Kderiv | 2f1 | 3f2 | hl-hyp | family-neg | family-pos | sample-family");
    cmd->add_option("--method", o.method, "evaluation route (target specific)");
    cmd->add_option("--x", o.x, "single evaluation point");
    cmd->add_option("--grid", o.grid, "start:stop:step");
    cmd->add_option("--points", o.points, "comma separated points");
    cmd->add_option("--output", o.output, "csv | json");
    cmd->add_option("--out", o.out_path, "write to this file instead of standard output");
    cmd->add_option("--max-terms", o.max_terms, "series term limit")->check(CLI::Range(2, 100000000));
    cmd->add_option("--rel-tol", o.rel_tol, "series relative tolerance");
    cmd->add_option("--a", o.a);
    cmd->add_option("--q", o.q);
    cmd->add_option("--alpha", o.alpha);
    cmd->add_option("--beta", o.beta);
    cmd->add_option("--gamma", o.gamma);
    cmd->add_option("--delta", o.delta);
    cmd->add_option("--p", o.p);
    cmd->add_option("--sigma", o.sigma);
    cmd->add_option("--theta", o.theta);
    cmd->add_option("--b", o.b);
    cmd->add_option("--c", o.c);
    cmd->add_option("--a1", o.a1);
    cmd->add_option("--a2", o.a2);
    cmd->add_option("--a3", o.a3);
    cmd->add_option("--b1", o.b1);
    cmd->add_option("--b2", o.b2);
    cmd->add_option("--n", o.n);
    cmd->add_option("--j", o.j);
    cmd->add_option("--i", o.i);
    cmd->add_option("--m", o.m);
    cmd->add_option("--k", o.k);
}

} // namespace

ExitReport run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Heun functions, confluent Heun functions and indices of coincidence", "heunc"};
    app.require_subcommand(1);

    CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a point (or grid)");
    CLI::App* entropy_cmd = app.add_subcommand("entropy", "order-2 Renyi/Tsallis entropy");
    CLI::App* verify = app.add_subcommand("verify", "exact identities and functional relations");
    CLI::App* table = app.add_subcommand("table", "tabulate a function on a grid");
    CLI::App* crosscheck = app.add_subcommand("crosscheck", "compare every route of a target on a grid");
    for (CLI::App* cmd : {eval, entropy_cmd, table, crosscheck}) {
        add_function_options(cmd, o);
    }
    entropy_cmd->add_option("--s", o.s, "index of coincidence value");
    entropy_cmd->add_option("--kind", o.kind, "renyi | tsallis");
    crosscheck->add_option("--tol", o.tol, "maximum scaled discrepancy (default 1e-8)");
    verify->add_option("--max-n", o.max_n, "identities are checked for 0 <= k <= n <= max-n");
    verify->add_option("--trials", o.trials, "random trials per relation")->check(CLI::PositiveNumber);
    verify->add_option("--tol", o.tol, "relation residual tolerance (default 1e-7)");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--relations", o.relations, "comma separated relation ids, or none");
    verify->add_option("--mutate", o.mutate, "test hook: perturb one binomial, e.g. A:2:top:1");
    verify->add_option("--out", o.out_path, "write the report to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? success : usage_error, e.what()};
    }

    try {
        if (eval->parsed()) {
            return cmd_eval(o, out, err);
        }
        if (entropy_cmd->parsed()) {
            return cmd_entropy(o, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out, err);
        }
        if (table->parsed()) {
            return cmd_table(o, out, err);
        }
        return cmd_crosscheck(o, out, err);
    } catch (const DivergentSeries& e) {
        err << "error: " << e.what() << '\n';
        return {numerical_failure, e.what()};
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return {usage_error, e.what()};
    } catch (const std::invalid_argument& e) { // UsageError, UnknownRelation
        err << "error: " << e.what() << '\n';
        return {usage_error, e.what()};
    } catch (const std::domain_error& e) { // DomainError, PoleError
        err << "error: " << e.what() << '\n';
        return {usage_error, e.what()};
    }
}

} // namespace heun::cli
