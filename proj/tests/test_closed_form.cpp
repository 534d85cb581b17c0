#include "kpower/closed_form.hpp"

#include "kpower/propagation.hpp"

#include "doctest.h"

using namespace kpower;

TEST_CASE("singleton generation limit") {
    CHECK(singleton_generation_limit(1) == 2);
    CHECK(singleton_generation_limit(2) == 2);
    CHECK(singleton_generation_limit(3) == 3);
    CHECK(singleton_generation_limit(6) == 3);
    CHECK(singleton_generation_limit(7) == 4);
    CHECK_THROWS_AS((void)singleton_generation_limit(0), std::invalid_argument);

    for (int k = 1; k <= 1000; ++k) {
        const int n = singleton_generation_limit(k);
        CHECK((1 << (n - 1)) - 1 <= k);
        CHECK(k <= (1 << n) - 2);
    }
}

TEST_CASE("pseudofractal predictions") {
    CHECK(predict_pseudofractal(2, 1).value == 1);
    CHECK(predict_pseudofractal(2, 1).regime == Regime::singleton);
    CHECK(predict_pseudofractal(3, 1).value == 2);
    CHECK(predict_pseudofractal(3, 1).regime == Regime::formula);
    CHECK(predict_pseudofractal(5, 1).value == 6);
    // Exhaustion on the 123-vertex graph certifies 3 here (no 2-set works).
    CHECK(predict_pseudofractal(5, 3).value == 3);
    CHECK(predict_pseudofractal(4, 3).value == 2);
    CHECK(predict_pseudofractal(1, 9).value == 1);
    CHECK_THROWS_AS((void)predict_pseudofractal(1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)predict_pseudofractal(0, 1), std::invalid_argument);
}

TEST_CASE("sierpinski predictions") {
    CHECK(predict_sierpinski(2, 1).value == 1);
    CHECK(predict_sierpinski(3, 1).value == 2);
    CHECK(predict_sierpinski(4, 1).value == 5);
    CHECK(predict_sierpinski(7, 2).value == 1);
    CHECK(predict_sierpinski(1, 1).value == 1);
    CHECK(predict_sierpinski(9, 4).value == 1);
    CHECK(predict_sierpinski(4, 1).regime == Regime::formula);
    CHECK(predict_sierpinski(7, 2).regime == Regime::singleton);
}

TEST_CASE("aux cover closed form") {
    CHECK(aux_cover_number_closed(1) == 1);
    CHECK(aux_cover_number_closed(2) == 2);
    CHECK(aux_cover_number_closed(3) == 3);
    CHECK(aux_cover_number_closed(4) == 6);
    for (int g = 2; g <= 11; ++g)
        CHECK(aux_cover_number_closed(g + 1) == 3 * aux_cover_number_closed(g) - 3);
}

TEST_CASE("prediction consistency chain") {
    // The pseudofractal value is the aux cover number shifted by the
    // singleton limit.
    for (int k = 1; k <= 14; ++k) {
        const int n = singleton_generation_limit(k);
        for (int g = n + 1; g <= 12; ++g)
            CHECK(predict_pseudofractal(g, k).value == aux_cover_number_closed(g - n + 1));
    }
    // Monotone: nonincreasing in k, nondecreasing in g.
    for (int g = 1; g <= 10; ++g)
        for (int k = 1; k <= 14; ++k) {
            CHECK(predict_pseudofractal(g, k).value >= predict_pseudofractal(g, k + 1).value);
            CHECK(predict_pseudofractal(g + 1, k).value >= predict_pseudofractal(g, k).value);
            CHECK(predict_sierpinski(g, k).value >= predict_sierpinski(g, k + 1).value);
            CHECK(predict_sierpinski(g + 1, k).value >= predict_sierpinski(g, k).value);
        }
    // Regime tag tracks the value.
    for (int g = 1; g <= 10; ++g)
        for (int k = 1; k <= 10; ++k)
            for (const auto& p : {predict_pseudofractal(g, k), predict_sierpinski(g, k)})
                CHECK((p.regime == Regime::singleton) == (p.value == 1));
}

TEST_CASE("cover class recurrence") {
    const auto rows = cover_class_recurrence(12);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].g == 3);
    CHECK(rows[0].two_hub == 4);
    CHECK(rows[0].three_hub == 3);
    // Oracle-adjudicated pair at g = 4.
    CHECK(rows[1].two_hub == 9);
    CHECK(rows[1].three_hub == 6);
    for (const auto& row : rows) {
        CHECK(std::min(row.two_hub, row.three_hub) == aux_cover_number_closed(row.g));
        CHECK(row.two_hub >= row.three_hub);
    }
    CHECK_THROWS_AS((void)cover_class_recurrence(2), std::invalid_argument);
}

TEST_CASE("singleton threshold is exact at small g") {
    for (int g = 1; g <= 5; ++g) {
        const GeneratedGraph gg = gen_pseudofractal(g);
        const PropagationEngine engine(gg.graph);
        const int threshold = (1 << (g - 1)) - 1;
        const VertexSet apex = VertexSet::from_ids(gg.graph.vertex_count(), {gg.hub_a()});
        for (int k = std::max(1, threshold); k <= threshold + 2; ++k)
            CHECK(engine.covers_all(k, apex));
        for (int k = 1; k < threshold; ++k) {
            CHECK(predict_pseudofractal(g, k).value > 1);
            for (VertexId v = 0; v < gg.graph.vertex_count(); ++v)
                CHECK_FALSE(engine.covers_all(
                    k, VertexSet::from_ids(gg.graph.vertex_count(), {v})));
        }
    }
}
