#include "heun/coincidence.hpp"
#include "heun/exact.hpp"
#include "heun/quadrature.hpp"
#include "heun/series.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace heun;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly")
{
    const GaussLegendreRule r = gauss_legendre(10);
    CHECK(r.nodes.size() == 10);
    double wsum = 0;
    for (const double w : r.weights) {
        wsum += w;
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(integrate(r, 0.0, 2.0, [](double t) { return std::pow(t, 19); }) ==
          doctest::Approx(std::pow(2.0, 20) / 20).epsilon(1e-14));
    CHECK(integrate(gauss_legendre_128(), 0.0, std::numbers::pi, [](double t) { return std::sin(t); }) ==
          doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("F_n: hand values and the mpmath oracle")
{
    // (0.7^2)^2 + (2 * 0.3 * 0.7)^2 + (0.3^2)^2
    CHECK(eval_F(2, 0.3, FMethod::definitional) == doctest::Approx(0.4246).epsilon(1e-15));
    CHECK(eval_F(2, 0.5, FMethod::established) == doctest::Approx(0.375).epsilon(1e-15));
    for (const FMethod m : all_f_methods) {
        CHECK(eval_F(7, 0.37, m) == doctest::Approx(0.21754750536709363696).epsilon(1e-14));
        CHECK(eval_F(5, 0.0, m) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(eval_F(5, 1.0, m) == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(eval_F(3, 1.2, FMethod::definitional), DomainError);
    CHECK_THROWS_AS(eval_F(-1, 0.2, FMethod::factored), DomainError);
}

TEST_CASE("F_n closed forms are polynomials valid beyond [0,1]")
{
    for (const FMethod m : {FMethod::power, FMethod::established, FMethod::expanded}) {
        CHECK(eval_F(4, 1.7, m) == doctest::Approx(eval_F(4, 1.7, FMethod::factored)).epsilon(1e-12));
    }
}

TEST_CASE("F_n is symmetric about 1/2")
{
    for (int n = 1; n <= 12; ++n) {
        for (const double x : {0.0, 0.13, 0.4}) {
            CHECK(eval_F(n, x, FMethod::definitional) == doctest::Approx(eval_F(n, 1.0 - x, FMethod::definitional)).epsilon(1e-14));
        }
    }
}

TEST_CASE("G_n: hand values and the mpmath oracle")
{
    for (const GMethod m : all_g_methods) {
        CHECK(eval_G(1, 0.8, m).value == doctest::Approx(1.0 / 2.6).epsilon(1e-14));
        CHECK(eval_G(2, 0.5, m).value == doctest::Approx(0.3125).epsilon(1e-14));
        CHECK(eval_G(4, 1.3, m).value == doctest::Approx(0.091174299916569864868).epsilon(1e-13));
    }
    CHECK_THROWS_AS(eval_G(2, -0.5, GMethod::factored), PoleError);
    CHECK_THROWS_AS(eval_G(2, -0.5, GMethod::established), PoleError);
    CHECK_THROWS_AS(eval_G(2, -0.1, GMethod::definitional), DomainError);
}

TEST_CASE("G_n definitional tail bound covers the true error")
{
    const EvalResult loose = eval_G(6, 2.0, GMethod::definitional, SeriesOptions{10000, 1e-6});
    const double exact = eval_G(6, 2.0, GMethod::factored).value;
    CHECK(loose.converged);
    CHECK(std::abs(loose.value - exact) <= loose.error_estimate);
}

TEST_CASE("K_n: oracles from exp(-2nx) I_0(2nx)")
{
    CHECK(eval_K(1, 0.1).value == doctest::Approx(0.82693855163432930842).epsilon(1e-14));
    CHECK(eval_K(3, 0.7).value == doctest::Approx(0.20157738405263386294).epsilon(1e-14));
    CHECK(eval_K(5, 2.5).value == doctest::Approx(0.080196773547436708422).epsilon(1e-14));
    CHECK(eval_K(4, 0.0).value == 1.0);
    CHECK_THROWS_AS(eval_K(2, -0.1), DomainError);
}

TEST_CASE("K_n derivatives: oracles and values at the origin")
{
    CHECK(eval_K_derivative(2, 1, 0.4) == doctest::Approx(-0.53718203122020800281).epsilon(1e-13));
    CHECK(eval_K_derivative(3, 3, 0.2) == doctest::Approx(-71.454802029899582858).epsilon(1e-13));
    for (int n = 1; n <= 10; ++n) {
        for (int j = 0; j <= 6; ++j) {
            const double expected = std::pow(-n, j) * to_double(ExactRational(binomial_exact(2 * j, j)));
            CHECK(eval_K_derivative(n, j, 0.0) == doctest::Approx(expected).epsilon(1e-13));
        }
    }
    CHECK(eval_K_derivative(4, 0, 0.3) == doctest::Approx(eval_K(4, 0.3).value).epsilon(1e-14));
}

TEST_CASE("K_n is the confluent Heun function HC(n, 1, 0, 1/2, 2n)")
{
    for (int n = 1; n <= 5; ++n) {
        const ConfluentHeunParams p(n, 1.0, 0.0, 0.5, 2.0 * n);
        for (const double x : {0.0, 0.3, 0.8}) {
            CHECK(eval_confluent_heun(p, x).value == doctest::Approx(eval_K(n, x).value).epsilon(1e-12));
        }
    }
}

TEST_CASE("HC family of K derivatives")
{
    for (int n = 1; n <= 3; ++n) {
        for (int j = 0; j <= 3; ++j) {
            const ConfluentHeunParams p(n, j + 1.0, 0.0, j + 0.5, 2.0 * n * (2 * j + 1));
            for (const double x : {0.0, 0.25, 0.7}) {
                CHECK(eval_HC_family(n, j, x) == doctest::Approx(eval_confluent_heun(p, x).value).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("entropy")
{
    CHECK(entropy(1.0, EntropyKind::renyi) == 0.0);
    CHECK(entropy(1.0, EntropyKind::tsallis) == 0.0);
    CHECK(entropy(0.25, EntropyKind::renyi) == doctest::Approx(std::log(4.0)));
    CHECK(entropy(0.25, EntropyKind::tsallis) == 0.75);
    CHECK_THROWS_AS(entropy(0.0, EntropyKind::renyi), DomainError);
    CHECK(entropy(1.5, EntropyKind::tsallis) == -0.5);
    CHECK(entropy(0.375, EntropyKind::renyi) == doctest::Approx(0.98082925301172623).epsilon(1e-15));
    CHECK(entropy(0.375, EntropyKind::tsallis) == 0.625);
}

TEST_CASE("method names round-trip")
{
    for (const FMethod m : all_f_methods) {
        CHECK(parse_f_method(to_string(m)) == m);
    }
    for (const GMethod m : all_g_methods) {
        CHECK(parse_g_method(to_string(m)) == m);
    }
    CHECK(parse_entropy_kind("tsallis") == EntropyKind::tsallis);
    CHECK_FALSE(parse_f_method("bogus").has_value());
}
