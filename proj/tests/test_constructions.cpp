#include "kpower/constructions.hpp"

#include "kpower/closed_form.hpp"
#include "kpower/propagation.hpp"

#include "doctest.h"

#include <algorithm>

using namespace kpower;

TEST_CASE("condition 1 checker") {
    const GeneratedGraph g1 = gen_pseudofractal(1);
    for (VertexId seed : g1.hubs)
        for (VertexId blocked : g1.hubs)
            if (seed != blocked) CHECK(check_condition1(g1, seed, blocked, 1));

    const GeneratedGraph g3 = gen_pseudofractal(3);
    CHECK(check_condition1(g3, g3.hub_a(), g3.hub_c(), 3));
    CHECK_FALSE(check_condition1(g3, g3.hub_a(), g3.hub_c(), 1));

    CHECK_THROWS_AS((void)check_condition1(g3, g3.hub_a(), g3.hub_a(), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)check_condition1(g3, 14, g3.hub_c(), 3), std::invalid_argument);
    CHECK_THROWS_AS((void)check_condition1(gen_sierpinski(3), 0, 1, 2),
                    std::invalid_argument);
}

TEST_CASE("condition 1 holds for every hub pair at the threshold") {
    for (int g = 1; g <= 5; ++g) {
        const GeneratedGraph gg = gen_pseudofractal(g);
        const int k = std::max(1, (1 << (g - 1)) - 1);
        for (VertexId seed : gg.hubs)
            for (VertexId blocked : gg.hubs)
                if (seed != blocked) CHECK(check_condition1(gg, seed, blocked, k));
    }
}

TEST_CASE("pseudofractal builder") {
    const ConditionedSet s21 = build_kpds_pseudofractal(2, 1);
    CHECK(s21.set.to_vector() == std::vector<VertexId>{0});
    CHECK(s21.condition == ConditionTag::singleton);

    const ConditionedSet s31 = build_kpds_pseudofractal(3, 1);
    CHECK(s31.set.size() == 2);
    CHECK(s31.condition == ConditionTag::lifted_cover);
    CHECK(is_kpds(s31.host->graph, 1, s31.set));

    const ConditionedSet s41 = build_kpds_pseudofractal(4, 1);
    CHECK(s41.set.size() == 3);
    CHECK(is_kpds(s41.host->graph, 1, s41.set));

    for (int g = 1; g <= 6; ++g) {
        for (int k : {1, 2, 3, 7}) {
            const ConditionedSet built = build_kpds_pseudofractal(g, k);
            CHECK(built.set.size() == predict_pseudofractal(g, k).value);
            CHECK(is_kpds(built.host->graph, k, built.set));
        }
    }
}

TEST_CASE("condition 2 checker") {
    const GeneratedGraph s3 = gen_sierpinski(3);
    const auto bc = std::pair<VertexId, VertexId>{s3.hub_b(), s3.hub_c()};

    const ConditionedSet base = build_condition_set(3, ConditionTag::cond2, bc);
    CHECK(base.set.size() == 2);
    CHECK(check_condition2(s3, base.set, bc));
    CHECK(base.set.contains(s3.hub_a()));  // the third corner

    CHECK_FALSE(check_condition2(
        s3, VertexSet::from_ids(15, {s3.hub_a(), s3.hub_b()}), bc));
    CHECK_FALSE(check_condition2(s3, VertexSet(15), bc));

    CHECK_THROWS_AS((void)check_condition2(s3, base.set, {s3.hub_b(), s3.hub_b()}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)check_condition2(s3, base.set, {5, 6}), std::invalid_argument);
}

TEST_CASE("condition 3 checker") {
    const GeneratedGraph s3 = gen_sierpinski(3);
    const ConditionedSet base = build_condition_set(3, ConditionTag::cond3);
    CHECK(base.set.size() == 2);
    CHECK(check_condition3(s3, base.set));

    // A set containing a corner fails outright.
    VertexSet with_corner = base.set;
    with_corner.erase(base.set.to_vector().front());
    with_corner.insert(s3.hub_a());
    CHECK_FALSE(check_condition3(s3, with_corner));

    const GeneratedGraph s2 = gen_sierpinski(2);
    for (VertexId v = 0; v < 6; ++v) {
        if (s2.graph.degree(v) == 4)
            CHECK(check_condition3(s2, VertexSet::from_ids(6, {v})));
    }
}

TEST_CASE("condition set recursion") {
    const ConditionedSet c34 = build_condition_set(4, ConditionTag::cond3);
    CHECK(c34.set.size() == 5);

    const GeneratedGraph s5 = gen_sierpinski(5);
    const ConditionedSet c25 = build_condition_set(
        5, ConditionTag::cond2, std::pair<VertexId, VertexId>{s5.hub_b(), s5.hub_c()});
    CHECK(c25.set.size() == 14);
    CHECK(check_condition2(s5, c25.set, {s5.hub_b(), s5.hub_c()}));

    // Every endpoint orientation is constructible via the corner symmetries.
    for (int g = 3; g <= 5; ++g) {
        const GeneratedGraph sg = gen_sierpinski(g);
        const std::array<std::pair<VertexId, VertexId>, 3> pairs = {
            std::pair<VertexId, VertexId>{sg.hub_b(), sg.hub_c()},
            {sg.hub_a(), sg.hub_b()},
            {sg.hub_a(), sg.hub_c()}};
        for (const auto& pair : pairs) {
            const ConditionedSet built =
                build_condition_set(g, ConditionTag::cond2, pair);
            CHECK(check_condition2(sg, built.set, pair));
            CHECK(built.set.size() == predict_sierpinski(g, 1).value);
        }
    }

    CHECK_THROWS_AS((void)build_condition_set(3, ConditionTag::cond2, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_condition_set(2, ConditionTag::cond2,
                                              std::pair<VertexId, VertexId>{0, 5}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_condition_set(1, ConditionTag::cond3), std::invalid_argument);
    CHECK_THROWS_AS((void)build_condition_set(3, ConditionTag::singleton),
                    std::invalid_argument);
}

TEST_CASE("g=3 witness censuses") {
    // Full enumeration over all C(15,2) = 105 pairs: each endpoint
    // orientation has exactly one condition-2 witness (the third corner plus
    // the opposite edge's midpoint) and condition 3 has nine witnesses.
    const GeneratedGraph s3 = gen_sierpinski(3);
    const std::array<std::pair<VertexId, VertexId>, 3> pairs = {
        std::pair<VertexId, VertexId>{s3.hub_b(), s3.hub_c()},
        {s3.hub_a(), s3.hub_b()},
        {s3.hub_a(), s3.hub_c()}};
    for (const auto& pair : pairs) {
        int count = 0;
        for (VertexId a = 0; a < 15; ++a)
            for (VertexId b = a + 1; b < 15; ++b)
                if (check_condition2(s3, VertexSet::from_ids(15, {a, b}), pair)) ++count;
        CHECK(count == 1);
    }
    int cond3_count = 0;
    for (VertexId a = 0; a < 15; ++a)
        for (VertexId b = a + 1; b < 15; ++b)
            if (check_condition3(s3, VertexSet::from_ids(15, {a, b}))) ++cond3_count;
    CHECK(cond3_count == 9);
}

TEST_CASE("condition 2 leftover path swallows whole") {
    // Seeding any single path vertex on top of the witness monitors the
    // entire leftover path under k = 1.
    for (int g = 3; g <= 4; ++g) {
        const GeneratedGraph sg = gen_sierpinski(g);
        const auto pair = std::pair<VertexId, VertexId>{sg.hub_b(), sg.hub_c()};
        const ConditionedSet built = build_condition_set(g, ConditionTag::cond2, pair);
        VertexSet path = VertexSet::full(sg.graph.vertex_count());
        path.subtract(propagate(sg.graph, 1, built.set).final_set());
        REQUIRE_FALSE(path.empty());
        path.for_each([&](VertexId p) {
            VertexSet seed = built.set;
            seed.insert(p);
            CHECK(path.is_subset_of(propagate(sg.graph, 1, seed).final_set()));
        });
    }
}

TEST_CASE("sierpinski builder") {
    const ConditionedSet s52 = build_kpds_sierpinski(5, 2);
    CHECK(s52.set.size() == 1);
    CHECK(s52.condition == ConditionTag::singleton);
    CHECK(is_kpds(s52.host->graph, 2, s52.set));

    const ConditionedSet s41 = build_kpds_sierpinski(4, 1);
    CHECK(s41.set.size() == 5);
    CHECK(s41.condition == ConditionTag::cond3);
    CHECK(is_kpds(s41.host->graph, 1, s41.set));

    const ConditionedSet s11 = build_kpds_sierpinski(1, 1);
    CHECK(s11.set.size() == 1);

    for (int g = 1; g <= 6; ++g) {
        for (int k = 1; k <= 4; ++k) {
            const ConditionedSet built = build_kpds_sierpinski(g, k);
            CHECK(built.set.size() == predict_sierpinski(g, k).value);
            CHECK(is_kpds(built.host->graph, k, built.set));
        }
    }
}
