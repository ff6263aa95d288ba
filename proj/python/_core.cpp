#include "heun/cli.hpp"
#include "heun/closed_forms.hpp"
#include "heun/coincidence.hpp"
#include "heun/hypergeom.hpp"
#include "heun/series.hpp"
#include "heun/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace heun;

namespace
{

py::dict relation_report(const RelationReport& r)
{
    py::dict point;
    for (const auto& [name, value] : r.worst_point.params) {
        point[py::str(name)] = value;
    }
    point["x"] = r.worst_point.x;
    py::dict d;
    d["id"] = std::string(to_string(r.id));
    d["passed"] = r.passed;
    d["worst_residual"] = r.worst_residual;
    d["worst_point"] = point;
    d["trials"] = r.trials;
    d["tol"] = r.tol;
    return d;
}

py::dict identity_sweep(const IdentitySweep& s)
{
    py::dict d;
    d["passed"] = s.passed;
    d["checked"] = s.checked;
    d["failures"] = s.failures;
    d["first_failure"] = s.first_failure ? py::cast(*s.first_failure) : py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Heun and confluent Heun functions, indices of coincidence and their entropies";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", domain_error.ptr());
    py::register_exception<DivergentSeries>(m, "DivergentSeries", PyExc_ArithmeticError);
    py::register_exception<UnknownRelation>(m, "UnknownRelation", PyExc_KeyError);

    py::class_<SeriesOptions>(m, "SeriesOptions")
        .def(py::init([](std::size_t max_terms, double rel_tol) { return SeriesOptions{max_terms, rel_tol}; }),
             py::arg("max_terms") = 10000, py::arg("rel_tol") = 1e-15)
        .def_readwrite("max_terms", &SeriesOptions::max_terms)
        .def_readwrite("rel_tol", &SeriesOptions::rel_tol);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_readonly("terms_used", &EvalResult::terms_used)
        .def_readonly("converged", &EvalResult::converged)
        .def_readonly("error_estimate", &EvalResult::error_estimate)
        .def("__float__", [](const EvalResult& r) { return r.value; })
        .def("__repr__", [](const EvalResult& r) {
            std::ostringstream s;
            s << "EvalResult(value=" << cli::format_number(r.value) << ", terms_used=" << r.terms_used
              << ", converged=" << (r.converged ? "True" : "False") << ", error_estimate=" << r.error_estimate << ")";
            return s.str();
        });

    py::class_<SeriesJet>(m, "SeriesJet")
        .def_readonly("value", &SeriesJet::value)
        .def_readonly("first", &SeriesJet::first)
        .def_readonly("second", &SeriesJet::second)
        .def_readonly("terms_used", &SeriesJet::terms_used)
        .def_readonly("converged", &SeriesJet::converged)
        .def_readonly("error_estimate", &SeriesJet::error_estimate);

    py::class_<GeneralHeunParams>(m, "GeneralHeunParams")
        .def(py::init<double, double, double, double, double, double>(), py::arg("a"), py::arg("q"), py::arg("alpha"),
             py::arg("beta"), py::arg("gamma"), py::arg("delta"))
        .def_property_readonly("a", &GeneralHeunParams::a)
        .def_property_readonly("q", &GeneralHeunParams::q)
        .def_property_readonly("alpha", &GeneralHeunParams::alpha)
        .def_property_readonly("beta", &GeneralHeunParams::beta)
        .def_property_readonly("gamma", &GeneralHeunParams::gamma)
        .def_property_readonly("delta", &GeneralHeunParams::delta)
        .def_property_readonly("epsilon", &GeneralHeunParams::epsilon)
        .def_property_readonly("radius", &GeneralHeunParams::radius);

    py::class_<ConfluentHeunParams>(m, "ConfluentHeunParams")
        .def(py::init<double, double, double, double, double>(), py::arg("p"), py::arg("gamma"), py::arg("delta"),
             py::arg("alpha"), py::arg("sigma"))
        .def_property_readonly("p", &ConfluentHeunParams::p)
        .def_property_readonly("gamma", &ConfluentHeunParams::gamma)
        .def_property_readonly("delta", &ConfluentHeunParams::delta)
        .def_property_readonly("alpha", &ConfluentHeunParams::alpha)
        .def_property_readonly("sigma", &ConfluentHeunParams::sigma);

    const SeriesOptions defaults{};
    m.def("eval_heun_local", &eval_heun_local, py::arg("params"), py::arg("x"), py::arg("opts") = defaults);
    m.def("heun_local_jet", &heun_local_jet, py::arg("params"), py::arg("x"), py::arg("opts") = defaults);
    m.def("heun_local_coefficients", &heun_local_coefficients, py::arg("params"), py::arg("count"));
    m.def("eval_confluent_heun", &eval_confluent_heun, py::arg("params"), py::arg("x"), py::arg("opts") = defaults);
    m.def("confluent_heun_jet", &confluent_heun_jet, py::arg("params"), py::arg("x"), py::arg("opts") = defaults);
    m.def("heun_ode_residual", &heun_ode_residual, py::arg("params"), py::arg("x"), py::arg("opts") = defaults);

    py::enum_<FMethod>(m, "FMethod")
        .value("definitional", FMethod::definitional)
        .value("factored", FMethod::factored)
        .value("power", FMethod::power)
        .value("established", FMethod::established)
        .value("expanded", FMethod::expanded);
    py::enum_<GMethod>(m, "GMethod")
        .value("definitional", GMethod::definitional)
        .value("factored", GMethod::factored)
        .value("power", GMethod::power)
        .value("established", GMethod::established);
    py::enum_<EntropyKind>(m, "EntropyKind").value("renyi", EntropyKind::renyi).value("tsallis", EntropyKind::tsallis);

    m.def("eval_F", &eval_F, py::arg("n"), py::arg("x"), py::arg("method") = FMethod::definitional);
    m.def("eval_G", &eval_G, py::arg("n"), py::arg("x"), py::arg("method") = GMethod::definitional,
          py::arg("opts") = defaults);
    m.def("eval_K", &eval_K, py::arg("n"), py::arg("x"), py::arg("opts") = defaults);
    m.def("eval_K_derivative", &eval_K_derivative, py::arg("n"), py::arg("j"), py::arg("x"));
    m.def("eval_K_derivative_quadrature", &eval_K_derivative_quadrature, py::arg("n"), py::arg("j"), py::arg("x"));
    m.def("eval_HC_family", &eval_HC_family, py::arg("n"), py::arg("j"), py::arg("x"));
    m.def("entropy", &entropy, py::arg("s"), py::arg("kind") = EntropyKind::renyi);

    py::class_<FamilyParamsNeg>(m, "FamilyParamsNeg")
        .def(py::init<int, double, double>(), py::arg("n"), py::arg("theta"), py::arg("gamma"))
        .def("heun_params", &FamilyParamsNeg::heun_params);
    py::class_<FamilyParamsPos>(m, "FamilyParamsPos")
        .def(py::init<int, double, int>(), py::arg("n"), py::arg("theta"), py::arg("gamma"))
        .def("heun_params", &FamilyParamsPos::heun_params);
    m.def("eval_family_negative", &eval_family_negative, py::arg("params"), py::arg("x"));
    m.def("eval_family_positive", &eval_family_positive, py::arg("params"), py::arg("x"));
    m.def("eval_sample_family", &eval_sample_family, py::arg("n"), py::arg("i"), py::arg("x"));
    m.def("sample_family_heun_params", &sample_family_heun_params, py::arg("n"), py::arg("i"));

    m.def(
        "gauss_2f1",
        [](double a, double b, double c, double x, const SeriesOptions& opts) {
            return gauss_2f1(Gauss2F1Params(a, b, c), x, opts);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("opts") = defaults);
    m.def(
        "clausen_3f2_unit",
        [](double a1, double a2, double a3, double b1, double b2, const SeriesOptions& opts) {
            return clausen_3f2_unit(Clausen3F2Params(a1, a2, a3, b1, b2), opts);
        },
        py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("b1"), py::arg("b2"), py::arg("opts") = defaults);
    m.def("eval_hl_hypergeometric", &eval_hl_hypergeometric, py::arg("q"), py::arg("x"), py::arg("opts") = defaults);
    m.def("gauss_2f1_closed", &gauss_2f1_closed, py::arg("m"), py::arg("k"), py::arg("x"));

    m.def(
        "sweep_identity_A", [](int max_n) { return identity_sweep(sweep_identity_A(max_n)); }, py::arg("max_n") = 50);
    m.def(
        "sweep_identity_B", [](int max_n) { return identity_sweep(sweep_identity_B(max_n)); }, py::arg("max_n") = 50);
    m.def("relation_ids", [] {
        std::vector<std::string> ids;
        for (const RelationId id : all_relations) {
            ids.emplace_back(to_string(id));
        }
        return ids;
    });
    m.def(
        "check_relation",
        [](const std::string& id, std::size_t trials, double tol, std::uint64_t seed) {
            return relation_report(check_relation(parse_relation(id), trials, tol, seed));
        },
        py::arg("id"), py::arg("trials") = 100, py::arg("tol") = 1e-7, py::arg("seed") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const cli::ExitReport r = cli::run(args, out, err);
            return py::make_tuple(r.code, out.str(), err.str());
        },
        py::arg("args"), "Runs the heunc command line in-process; returns (exit code, stdout, stderr).");
}
