#include "heun/hypergeom.hpp"
#include "heun/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace heun;

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(GeneralHeunParams(0.0, 1, 1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(GeneralHeunParams(1.0, 1, 1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(GeneralHeunParams(0.5, 1, 1, 1, -2.0, 1), DomainError);
    CHECK_THROWS_AS(GeneralHeunParams(0.5, NAN, 1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(ConfluentHeunParams(0.0, 1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(ConfluentHeunParams(1.0, 0.0, 1, 1, 1), DomainError);

    const GeneralHeunParams p(-2.5, 1, 1, 1, 1, 1);
    CHECK(p.radius() == 1.0);
    CHECK(GeneralHeunParams(0.4, 1, 1, 1, 1, 1).radius() == doctest::Approx(0.4));
    CHECK(GeneralHeunParams(0.5, 0, 2, 3, 1.5, 0.5).epsilon() == doctest::Approx(4.0));
}

TEST_CASE("evaluation outside the convergence disk is rejected")
{
    const GeneralHeunParams p(0.5, 1, 2, 1, 1, 1);
    CHECK_THROWS_AS(eval_heun_local(p, 0.5), DomainError);
    CHECK_THROWS_AS(eval_heun_local(p, -0.6), DomainError);
    CHECK_THROWS_AS(eval_confluent_heun(ConfluentHeunParams(1, 1, 0, 0.5, 2), 1.0), DomainError);
    CHECK_THROWS_AS(eval_heun_local(p, 0.1, SeriesOptions{1, 1e-15}), DomainError);
}

TEST_CASE("Hl at the origin and its slope")
{
    const GeneralHeunParams p(0.4, 0.3, 1.2, -0.7, 1.5, 0.8);
    const EvalResult r = eval_heun_local(p, 0.0);
    CHECK(r.value == 1.0);
    CHECK(r.converged);
    CHECK(heun_slope_at_origin(p) == doctest::Approx(0.3 / (0.4 * 1.5)));
    const auto c = heun_local_coefficients(p, 3);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == 1.0);
    CHECK(c[1] == doctest::Approx(0.5));
}

TEST_CASE("Hl against an ODE-integration oracle")
{
    // mpmath odefun, 40 digits, integrated from x = 0.01
    const GeneralHeunParams p(0.4, 0.3, 1.2, -0.7, 1.5, 0.8);
    const EvalResult r = eval_heun_local(p, 0.15);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.1008225097218814642).epsilon(1e-14));
}

TEST_CASE("Hl(1/2, 1; 2, 1; 1, 1; x) = 1/(1-2x)")
{
    const GeneralHeunParams p(0.5, 1, 2, 1, 1, 1);
    for (const double x : {-0.45, -0.2, 0.0, 0.1, 0.3, 0.45}) {
        CHECK(eval_heun_local(p, x).value == doctest::Approx(1.0 / (1.0 - 2.0 * x)).epsilon(1e-13));
    }
}

TEST_CASE("Hl reduces to 2F1 when q = a alpha beta and epsilon = 0")
{
    const double a = 0.7, al = 0.3, be = -1.7, ga = 2.2;
    const GeneralHeunParams p(a, a * al * be, al, be, ga, al + be + 1.0 - ga);
    const Gauss2F1Params f(al, be, ga);
    for (const double x : {-0.6, -0.1, 0.25, 0.6}) {
        CHECK(eval_heun_local(p, x).value == doctest::Approx(gauss_2f1(f, x).value).epsilon(1e-13));
    }
}

TEST_CASE("jet derivatives agree with central differences")
{
    const GeneralHeunParams p(0.6, -0.4, 1.1, 2.3, 0.9, 1.7);
    const double x = 0.2, h = 1e-5;
    const SeriesJet j = heun_local_jet(p, x);
    const double fp = eval_heun_local(p, x + h).value;
    const double fm = eval_heun_local(p, x - h).value;
    CHECK(j.first == doctest::Approx((fp - fm) / (2 * h)).epsilon(1e-8));
    CHECK(j.second == doctest::Approx((fp - 2 * j.value + fm) / (h * h)).epsilon(1e-4));
}

TEST_CASE("series solutions satisfy their equations")
{
    const GeneralHeunParams p(0.6, -0.4, 1.1, 2.3, 0.9, 1.7);
    for (const double x : {-0.5, -0.2, 0.1, 0.27}) {
        CHECK(std::abs(heun_ode_residual(p, x)) < 1e-12);
    }
    const ConfluentHeunParams c(0.7, 1.3, 0.4, -0.6, 0.9);
    for (const double x : {-0.8, 0.2, 0.6, 0.9}) {
        CHECK(std::abs(confluent_ode_residual(c, x)) < 1e-10);
    }
}

TEST_CASE("homotopy transform reproduces Hl")
{
    const GeneralHeunParams p(0.6, -0.4, 1.1, 2.3, 0.9, 1.7);
    const HomotopyTransform t = transform_homotopy(p);
    CHECK(t.exponent == doctest::Approx(-1.1 - 2.3 + 0.9 + 1.7));
    for (const double x : {-0.4, 0.1, 0.35}) {
        const double rhs = std::pow(1.0 - x / p.a(), t.exponent) * eval_heun_local(t.transformed, x).value;
        CHECK(eval_heun_local(p, x).value == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("confluent Heun against an ODE-integration oracle")
{
    const ConfluentHeunParams c(0.7, 1.3, 0.4, -0.6, 0.9);
    CHECK(eval_confluent_heun(c, 0.35).value == doctest::Approx(0.74628197918316521797).epsilon(1e-14));
    const auto coeffs = confluent_heun_coefficients(c, 2);
    CHECK(coeffs[1] == doctest::Approx(-0.9 / 1.3));
}

TEST_CASE("confluent Heun jet is consistent with its value")
{
    const ConfluentHeunParams c(1.2, 2.0, 0.0, 0.5, 1.0);
    const double x = 0.4, h = 1e-5;
    const SeriesJet j = confluent_heun_jet(c, x);
    const double d = (eval_confluent_heun(c, x + h).value - eval_confluent_heun(c, x - h).value) / (2 * h);
    CHECK(j.first == doctest::Approx(d).epsilon(1e-8));
}

TEST_CASE("term budget exhaustion is reported, not thrown")
{
    const GeneralHeunParams p(0.5, 1, 2, 1, 1, 1);
    const EvalResult r = eval_heun_local(p, 0.45, SeriesOptions{5, 1e-15});
    CHECK_FALSE(r.converged);
    CHECK(r.terms_used <= 5);
    CHECK(r.error_estimate > 0.0);
}
