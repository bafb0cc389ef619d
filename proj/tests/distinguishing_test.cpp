#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphsym/distinguishing.hpp"
#include "graphsym/enumerate.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/power.hpp"
#include "oracles.hpp"

using namespace graphsym;

TEST_CASE("is_distinguishing on fixed labelings") {
    Graph k3 = complete_graph(3);
    auto auts = enumerate_automorphisms(k3);
    CHECK(is_distinguishing(k3, auts, Labeling::vertex(3, {1, 2, 3})));
    CHECK_FALSE(is_distinguishing(k3, auts, Labeling::vertex(2, {1, 1, 2})));

    Graph c4 = cycle_graph(4);
    auto c4auts = enumerate_automorphisms(c4);
    CHECK_FALSE(is_distinguishing(c4, c4auts, Labeling::edge(2, {1, 1, 1, 2})));
}

TEST_CASE("distinguishing number fixed values") {
    CHECK(distinguishing_number(complete_graph(4)).value == 4);
    CHECK(distinguishing_number(cycle_graph(5)).value == 3);
    CHECK(distinguishing_number(path_graph(9)).value == 2);
    CHECK(distinguishing_number(subdivide(path_graph(5), 2).graph).value == 2);
    CHECK(distinguishing_number(complete_graph(1)).value == 1);
    // Asymmetric graph: one label suffices.
    Graph asym = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}});
    if (enumerate_automorphisms(asym).order() == 1)
        CHECK(distinguishing_number(asym).value == 1);
}

TEST_CASE("distinguishing index fixed values") {
    auto k33 = distinguishing_index(complete_bipartite_graph(3, 3));
    REQUIRE(k33.has_value());
    CHECK(k33->value == 3);

    auto c6 = distinguishing_index(cycle_graph(6));
    REQUIRE(c6.has_value());
    CHECK(c6->value == 2);

    auto spider = distinguishing_index(subdivide(star_graph(3), 2).graph);
    REQUIRE(spider.has_value());
    CHECK(spider->value == 2);

    CHECK_FALSE(distinguishing_index(complete_graph(2)).has_value());  // undefined
    CHECK_THROWS_AS(distinguishing_index(Graph::build(3, {})), std::invalid_argument);
}

TEST_CASE("total distinguishing number fixed values") {
    CHECK(total_distinguishing_number(star_graph(4)).value == 2);
    CHECK(total_distinguishing_number(complete_graph(1)).value == 1);
    CHECK(total_distinguishing_number(star_graph(9)).value == 3);
}

TEST_CASE("search results carry certified certificates") {
    for (const Graph& g : {complete_graph(4), cycle_graph(5), star_graph(4),
                           power(path_graph(6), 2)}) {
        auto auts = enumerate_automorphisms(g);
        auto d = distinguishing_number(g, auts);
        CHECK(is_distinguishing(g, auts, d.certificate));
        auto dp = distinguishing_index(g, auts);
        REQUIRE(dp.has_value());
        CHECK(is_distinguishing(g, auts, dp->certificate));
        auto dt = total_distinguishing_number(g, auts);
        CHECK(is_distinguishing(g, auts, dt.certificate));
    }
}

TEST_CASE("pruned search agrees with the naive oracle on all connected graphs up to n=5") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& g : connected_graphs(n)) {
            auto auts = enumerate_automorphisms(g);
            CHECK(distinguishing_number(g, auts).value == oracles::naive_D(g));
            CHECK(total_distinguishing_number(g, auts).value == oracles::naive_Dtotal(g));
            if (g.edge_count() > 0) {
                auto pruned = distinguishing_index(g, auts);
                auto naive = oracles::naive_Dprime(g);
                CHECK(pruned.has_value() == naive.has_value());
                if (pruned && naive) CHECK(pruned->value == *naive);
            }
        }
    }
}

TEST_CASE("budget exhaustion is loud") {
    CHECK_THROWS_AS(distinguishing_number(complete_graph(6), SearchLimits{10}),
                    BudgetExceeded);
}

TEST_CASE("kalinowski bound") {
    CHECK(kalinowski_bound(4) == 2);
    CHECK(kalinowski_bound(1) == 1);
    CHECK(kalinowski_bound(10) == 4);
    CHECK_THROWS_AS(kalinowski_bound(0), std::invalid_argument);
}

TEST_CASE("sphere bound") {
    CHECK(sphere_bound(2, 3) == 2);
    CHECK(sphere_bound(2, 5) == 3);
    CHECK(sphere_bound(3, 8) == 2);
    // Direct-evaluation cross-check of the capacity minimization.
    for (int k = 1; k <= 4; ++k) {
        for (int delta = 1; delta <= 20; ++delta) {
            int s = sphere_bound(k, delta);
            CHECK(sphere_label_capacity(s, k) >= delta);
            if (s > 2) CHECK(sphere_label_capacity(s - 1, k) < delta);
        }
    }
}

TEST_CASE("pair bound") {
    CHECK(pair_bound(1) == 1);
    CHECK(pair_bound(3) == 2);
    CHECK(pair_bound(7) == 4);
    for (int dp = 1; dp <= 30; ++dp) {
        int s = pair_bound(dp);
        CHECK(s * (s + 1) / 2 >= dp);
        if (s > 1) CHECK((s - 1) * s / 2 < dp);
    }
}

TEST_CASE("tuple bound against exhaustive tuple-class enumeration") {
    CHECK(reversal_class_count(2, 3) == 2);
    CHECK(reversal_class_count(1, 2) == 0);
    CHECK(reversal_class_count(4, 2) == 6);
    for (int s = 1; s <= 4; ++s)
        for (int k = 2; k <= 4; ++k)
            CHECK(reversal_class_count(s, k) == oracles::count_tuple_classes(s, k));

    CHECK(tuple_bound(2, 3) == 2);
    CHECK(tuple_bound(1, 2) == 2);
    CHECK(tuple_bound(6, 2) == 4);
    CHECK_THROWS_AS(tuple_bound(1, 1), std::invalid_argument);
}
