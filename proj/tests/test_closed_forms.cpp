#include "heun/closed_forms.hpp"

#include <doctest.h>

#include <cmath>

using namespace heun;

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(3.0, 0) == 1.0);
    CHECK(pochhammer(1.0, 5) == 120.0);
    CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
    CHECK(pochhammer(-2.0, 3) == 0.0);
}

TEST_CASE("negative family: n = 1 by hand")
{
    // 1 + 4 theta/gamma (x^2 - x)
    const FamilyParamsNeg fp(1, 2.5, 2.0);
    for (const double x : {-1.0, 0.3, 2.0}) {
        CHECK(eval_family_negative(fp, x) == doctest::Approx(1.0 + 4.0 * 2.5 / 2.0 * (x * x - x)));
    }
}

TEST_CASE("negative family matches the series engine")
{
    for (int n = 0; n <= 6; ++n) {
        for (const double theta : {0.5, 1.7}) {
            const FamilyParamsNeg fp(n, theta, 1.5);
            for (const double x : {-0.4, 0.05, 0.3}) {
                CHECK(eval_family_negative(fp, x) == doctest::Approx(eval_heun_local(fp.heun_params(), x).value).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("positive family matches the series engine and has its pole at 1/2")
{
    for (int n = 1; n <= 5; ++n) {
        for (int g = 1; g <= n; ++g) {
            const FamilyParamsPos fp(n, 0.8, g);
            for (const double x : {-0.4, 0.1, 0.4}) {
                CHECK(eval_family_positive(fp, x) == doctest::Approx(eval_heun_local(fp.heun_params(), x).value).epsilon(1e-11));
            }
        }
    }
    CHECK_THROWS_AS(eval_family_positive(FamilyParamsPos(3, 0.8, 2), 0.5), PoleError);
    CHECK_THROWS_AS(eval_family_positive(FamilyParamsPos(3, 0.8, 2), 0.7), DomainError);
    CHECK_THROWS_AS(FamilyParamsPos(3, 0.8, 4), DomainError);
    CHECK_THROWS_AS(FamilyParamsPos(3, 0.8, 0), DomainError);
}

TEST_CASE("positive family with an integer exponent extends past 1/2")
{
    // theta = 1/2, n = gamma = 1: exponent -1, prefactor (1-2x)^{-1}, finite sum 1
    const FamilyParamsPos fp(1, 0.5, 1);
    CHECK(eval_family_positive(fp, 0.75) == doctest::Approx(1.0 / (1.0 - 1.5)));
}

TEST_CASE("sample family matches the series engine")
{
    for (int n = 1; n <= 8; ++n) {
        for (int i = 0; i <= n; ++i) {
            const GeneralHeunParams hp = sample_family_heun_params(n, i);
            for (const double x : {-0.45, -0.1, 0.2, 0.45}) {
                CHECK(eval_sample_family(n, i, x) == doctest::Approx(eval_heun_local(hp, x).value).epsilon(1e-11));
            }
        }
    }
    CHECK_THROWS_AS(eval_sample_family(3, 4, 0.1), DomainError);
}

TEST_CASE("sample family is normalised at the origin")
{
    for (int n = 1; n <= 10; ++n) {
        for (int i = 0; i <= n; ++i) {
            CHECK(eval_sample_family(n, i, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}
