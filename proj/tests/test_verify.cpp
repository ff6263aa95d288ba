#include "heun/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace heun;

TEST_CASE("identity A by hand: n = 2, k = 1")
{
    // C(1,1)C(2,1)C(2,1) + C(2,1)C(4,2)C(0,0) = 4 + 12 = 16 = 4 * C(2,1) * C(2,1)
    const auto r = check_identity_A(2, 1);
    CHECK(r.passed);
    CHECK(r.lhs == 16);
    CHECK(r.rhs == 16);
}

TEST_CASE("identity B by hand: n = 2, j = 1")
{
    // C(1,0)C(2,1) - (1/4)C(1,1)C(4,2) = 2 - 3/2 = 1/2 = 4^{-1} C(2,1) C(2,1) / C(2,1)
    const auto r = check_identity_B(2, 1);
    CHECK(r.passed);
    CHECK(r.lhs == ExactRational(1, 2));
    CHECK(r.rhs == ExactRational(1, 2));
}

TEST_CASE("both identities hold exactly for n <= 50")
{
    const IdentitySweep a = sweep_identity_A(50);
    const IdentitySweep b = sweep_identity_B(50);
    CHECK(a.passed);
    CHECK(b.passed);
    CHECK(a.checked == 51 * 52 / 2);
    CHECK(b.checked == 51 * 52 / 2);
}

TEST_CASE("every single-binomial mutation is detected")
{
    for (std::size_t bin = 0; bin < identity_binomial_count; ++bin) {
        for (const auto arg : {BinomialMutation::Arg::top, BinomialMutation::Arg::bottom}) {
            for (const int delta : {-1, 1}) {
                const BinomialMutation m{bin, arg, delta};
                CAPTURE(bin);
                CAPTURE(delta);
                CHECK_FALSE(sweep_identity_A(20, m).passed);
                CHECK_FALSE(sweep_identity_B(20, m).passed);
            }
        }
    }
}

TEST_CASE("relation ids round-trip and unknown names are rejected")
{
    std::set<std::string_view> names;
    for (const RelationId id : all_relations) {
        CHECK(parse_relation(to_string(id)) == id);
        names.insert(to_string(id));
    }
    CHECK(names.size() == all_relations.size());
    CHECK_THROWS_AS(parse_relation("rel_9_9"), UnknownRelation);
}

TEST_CASE("sampling is reproducible from the seed")
{
    for (const RelationId id : all_relations) {
        std::uint64_t s1 = 42, s2 = 42;
        for (int i = 0; i < 5; ++i) {
            const RelationPoint p1 = sample_relation_point(id, s1);
            const RelationPoint p2 = sample_relation_point(id, s2);
            CHECK(p1.x == p2.x);
            CHECK(p1.params == p2.params);
        }
    }
}

TEST_CASE("every relation holds on random points")
{
    for (const RelationId id : all_relations) {
        const RelationReport r = check_relation(id, 25, 1e-7, 7);
        CAPTURE(to_string(id));
        CHECK(r.passed);
        CHECK(r.trials == 25);
        CHECK(r.worst_residual < 1e-7);
    }
}

TEST_CASE("a perturbed relation is caught")
{
    RelationPoint p;
    p.params = {{"p", 1.1}, {"gamma", 1.4}, {"alpha", 0.3}};
    p.x = 0.3;
    const RelationSides s = evaluate_relation(RelationId::rel_4_1, p);
    CHECK(std::abs(s.lhs - s.rhs) < 1e-12);
    p.params[1].second = 1.5; // both sides move, but they must still agree
    const RelationSides t = evaluate_relation(RelationId::rel_4_1, p);
    CHECK(std::abs(t.lhs - t.rhs) < 1e-12);
    CHECK(std::abs(t.lhs - s.lhs) > 1e-3);
}

TEST_CASE("parameter pair from sum and product")
{
    const auto [r1, r2] = resolve_parameter_pair(5.0, 6.0);
    CHECK(r1 == doctest::Approx(3.0));
    CHECK(r2 == doctest::Approx(2.0));
    const auto [d1, d2] = resolve_parameter_pair(4.0, 4.0);
    CHECK(d1 == doctest::Approx(2.0));
    CHECK(d2 == doctest::Approx(2.0));
}

TEST_CASE("check_relation argument validation")
{
    CHECK_THROWS(check_relation(RelationId::rel_2_3, 0, 1e-7));
    CHECK_THROWS(check_relation(RelationId::rel_2_3, 3, 0.0));
    RelationPoint p;
    CHECK_THROWS_AS(p.get("a"), std::out_of_range);
}
