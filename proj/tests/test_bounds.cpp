#include <doctest.h>

#include <string>
#include <vector>

#include "bounds.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "metrics.hpp"

using namespace ordeg;

TEST_CASE("ball-size bound values") {
    CHECK(moore_bound(3, 2) == 10);
    CHECK(moore_bound(7, 2) == 50);
    CHECK(moore_bound(57, 2) == 3250);
    CHECK(moore_bound(8, 8) == 7686401);
    CHECK(moore_bound(3, 3) == 22);
    CHECK(moore_bound(4, 2) == 17);
    for (std::uint64_t d = 1; d <= 5; ++d) CHECK(moore_bound(2, d) == 2 * d + 1);
    for (std::uint64_t deg = 2; deg <= 10; ++deg) CHECK(moore_bound(deg, 1) == deg + 1);

    // Geometric-series form as an independent check.
    for (std::uint64_t deg = 3; deg <= 10; ++deg)
        for (std::uint64_t d = 1; d <= 6; ++d) {
            BigInt pw = 1;
            for (std::uint64_t i = 0; i < d; ++i) pw *= deg - 1;
            BigInt closed = 1 + deg * (pw - 1) / (deg - 2);
            CHECK(moore_bound(deg, d) == closed);
        }

    CHECK_THROWS_AS(moore_bound(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(moore_bound(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(moore_bound(3, 5000), limit_error);
}

TEST_CASE("bound ratio formatting") {
    CHECK(moore_ratio_pct(734820, 8, 8) == "9.56");
    CHECK(moore_ratio_pct(381, 20, 2) == "95.01");
    CHECK(moore_ratio_pct(256, 22, 2) == "52.78");
    CHECK(moore_ratio_pct(5, 2, 2) == "100.00");
    CHECK(moore_ratio_pct(1, 57, 2) == "0.03");
    // Third decimal 7 rounds up, 4 rounds down.
    CHECK(moore_ratio_pct(3, 4, 2) == "17.65");
    CHECK(moore_ratio_pct(2, 4, 2) == "11.76");
}

TEST_CASE("mean-distance floor") {
    CHECK(aspl_lower_bound(5, 4) == Rational(1, 1));
    CHECK(aspl_lower_bound(10, 3) == Rational(15, 9));
    CHECK(aspl_lower_bound(10, 3).fraction_string() == "5/3");
    CHECK(aspl_lower_bound(256, 22) == Rational(488, 255));
    CHECK(aspl_lower_bound(8, 3) == Rational(11, 7));
    CHECK(aspl_lower_bound(2, 1) == Rational(1, 1));
    CHECK_THROWS_AS(aspl_lower_bound(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(aspl_lower_bound(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(aspl_lower_bound(5, 5), std::invalid_argument);

    // Floor property against measured graphs.
    for (const Graph& g : {petersen(), kg8(4), brown_field(4), hypercube(4)}) {
        MetricsReport m = compute_metrics(g);
        REQUIRE(m.aspl.has_value());
        Rational lower = aspl_lower_bound(m.order, m.degrees.max_degree);
        CHECK(lower <= *m.aspl);
    }
    // The tightest family meets it exactly.
    MetricsReport m = compute_metrics(kkg8(4, 8));
    CHECK(*m.aspl == aspl_lower_bound(256, 22));
}

TEST_CASE("known optima ledger") {
    auto check = [](std::uint64_t deg, std::uint64_t d, OptimumKind kind, std::uint64_t value) {
        Optimum o = known_optimum(deg, d);
        CHECK(o.kind == kind);
        if (kind != OptimumKind::unknown) CHECK(o.value == value);
    };
    check(2, 2, OptimumKind::known, 5);
    check(3, 2, OptimumKind::known, 10);
    check(6, 2, OptimumKind::known, 32);
    check(7, 2, OptimumKind::known, 50);
    check(57, 2, OptimumKind::open, 3250);
    check(4, 2, OptimumKind::unknown, 0);
    check(3, 3, OptimumKind::unknown, 0);
    check(5, 1, OptimumKind::known, 6);
}

TEST_CASE("construction floor report") {
    // The projective and power-of-two entries apply only at diameter 2.
    BoundReport r = construction_lower_bounds(8, 8);
    CHECK(r.moore == 7686401);
    REQUIRE(r.de_bruijn.has_value());
    CHECK(*r.de_bruijn == 65536);
    CHECK_FALSE(r.power_of_two.has_value());
    CHECK_FALSE(r.brown.has_value());

    BoundReport r82 = construction_lower_bounds(8, 2);
    CHECK(r82.moore == 65);
    REQUIRE(r82.brown.has_value());
    CHECK(*r82.brown == 57);
    REQUIRE(r82.power_of_two.has_value());
    CHECK(*r82.power_of_two == 58);
    REQUIRE(r82.de_bruijn.has_value());
    CHECK(*r82.de_bruijn == 16);

    BoundReport r22 = construction_lower_bounds(22, 2);
    CHECK_FALSE(r22.brown.has_value());  // 21 is not a prime power
    REQUIRE(r22.de_bruijn.has_value());
    CHECK(*r22.de_bruijn == 121);
    CHECK_FALSE(r22.power_of_two.has_value());

    BoundReport r5 = construction_lower_bounds(5, 2);
    REQUIRE(r5.brown.has_value());
    CHECK(*r5.brown == 21);
    CHECK_FALSE(r5.de_bruijn.has_value());
    CHECK_FALSE(r5.power_of_two.has_value());
}

TEST_CASE("residue ring closed forms") {
    const std::pair<std::uint64_t, std::uint64_t> want[] = {
        {7, 3}, {13, 4}, {28, 6}, {31, 6}, {91, 12}, {57, 8}, {112, 12}, {117, 12}, {217, 18}, {133, 12}, {364, 24},
    };
    for (std::uint64_t n = 2; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(brown_ring_order(n) == want[n - 2].first);
        CHECK(brown_ring_degree(n) == want[n - 2].second);
    }
}

TEST_CASE("planner rankings") {
    auto plans = plan(256, 22);
    REQUIRE(plans.size() >= 2);
    CHECK(plans[0].family == ConstructionPlan::Family::kkg8);
    CHECK(plans[0].p1 == 4);
    CHECK(plans[0].p2 == 8);
    CHECK(plans[0].predicted_degree == 22);
    CHECK(plans[0].family_name() == "kkg8");
    CHECK(plans[0].params_string() == "a=4 b=8");
    bool has_2_16 = false;
    for (std::size_t i = 1; i < plans.size(); ++i)
        if (plans[i].family == ConstructionPlan::Family::kkg8 && plans[i].p1 == 2 && plans[i].p2 == 16)
            has_2_16 = true;
    CHECK(has_2_16);

    auto p100 = plan(100, 20);
    REQUIRE(p100.size() == 2);
    CHECK(p100[0].family == ConstructionPlan::Family::brown_field_dup);
    CHECK(p100[0].p1 == 9);
    CHECK(p100[0].p2 == 9);
    CHECK(p100[0].predicted_degree == 19);
    CHECK(p100[1].family == ConstructionPlan::Family::de_bruijn);
    CHECK(p100[1].p1 == 10);
    CHECK(p100[1].predicted_degree == 20);

    auto p381 = plan(381, 20);
    REQUIRE(!p381.empty());
    CHECK(p381[0].family == ConstructionPlan::Family::brown_field_dup);
    CHECK(p381[0].p1 == 19);
    CHECK(p381[0].p2 == 0);

    auto p32 = plan(32, 6);
    REQUIRE(p32.size() == 1);
    CHECK(p32[0].family == ConstructionPlan::Family::kg8);
    CHECK(p32[0].p1 == 4);

    auto trivial = plan(5, 4);
    REQUIRE(!trivial.empty());
    CHECK(trivial[0].family == ConstructionPlan::Family::complete);
    CHECK(trivial[0].predicted_diameter == 1);

    CHECK(plan(10, 3).empty());
}

TEST_CASE("planner realization certifies") {
    auto plans = plan(100, 20);
    REQUIRE(!plans.empty());
    CertifiedPlan c = realize_and_certify(plans[0]);
    CHECK(c.pass);
    CHECK(c.metrics.order == 100);
    CHECK(c.metrics.degrees.max_degree == 19);
    REQUIRE(c.metrics.diameter.has_value());
    CHECK(*c.metrics.diameter == 2);

    auto p256 = plan(256, 22);
    REQUIRE(!p256.empty());
    CertifiedPlan c256 = realize_and_certify(p256[0]);
    CHECK(c256.pass);
    CHECK(c256.metrics.degrees.is_regular);
}

TEST_CASE("best-order table rows") {
    auto rows = best_order_table(10);
    REQUIRE(rows.size() == 9);
    const struct {
        std::uint64_t degree, order;
        ConstructionPlan::Family family;
    } want[] = {
        {2, 3, ConstructionPlan::Family::complete},
        {3, 7, ConstructionPlan::Family::brown_field_dup},
        {4, 13, ConstructionPlan::Family::brown_field_dup},
        {5, 24, ConstructionPlan::Family::kg8},
        {6, 32, ConstructionPlan::Family::kg8},
        {7, 40, ConstructionPlan::Family::kg8},
        {8, 57, ConstructionPlan::Family::brown_field_dup},
        {9, 73, ConstructionPlan::Family::brown_field_dup},
        {10, 91, ConstructionPlan::Family::brown_field_dup},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].degree == want[i].degree);
        CHECK(rows[i].order == want[i].order);
        CHECK(rows[i].best.family == want[i].family);
    }
    // Orders never decrease with a larger degree budget.
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].order >= rows[i - 1].order);
    CHECK_THROWS_AS(best_order_table(1), std::invalid_argument);
    CHECK_THROWS_AS(best_order_table(513), limit_error);
}

TEST_CASE("double product family crosses half the ball bound") {
    for (std::uint64_t a = 2; a <= 5; ++a) {
        std::uint64_t b = 4 * a;
        std::uint64_t order = 8 * a * b;
        std::uint64_t degree = 4 * a + b - 2;
        CHECK(2 * BigInt(order) > moore_bound(degree, 2));
    }
}
