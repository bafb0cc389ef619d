#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "graphsym/automorphism.hpp"
#include "graphsym/enumerate.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/labeling.hpp"
#include "graphsym/power.hpp"

using namespace graphsym;

TEST_CASE("is_automorphism basics") {
    Graph p3 = path_graph(3);
    CHECK(is_automorphism(p3, Permutation({2, 1, 0})));
    CHECK_FALSE(is_automorphism(p3, Permutation({1, 0, 2})));
    CHECK(is_automorphism(cycle_graph(4), Permutation({1, 2, 3, 0})));
    CHECK_THROWS_AS(is_automorphism(p3, Permutation({0, 1})), std::invalid_argument);
}

TEST_CASE("group orders of standard families") {
    for (int n = 2; n <= 7; ++n)
        CHECK(enumerate_automorphisms(path_graph(n)).order() == 2);
    for (int n = 3; n <= 7; ++n)
        CHECK(enumerate_automorphisms(cycle_graph(n)).order() == 2 * n);
    long long f = 1;
    for (int n = 1; n <= 7; ++n) {
        f *= n;
        CHECK(enumerate_automorphisms(complete_graph(n)).order() == f);
    }
    // Spider: |Aut(K_{1,3}^{1/2})| = |Aut(K_{1,3})| = 6.
    CHECK(enumerate_automorphisms(subdivide(star_graph(3), 2).graph).order() == 6);
}

TEST_CASE("enumeration is sorted, duplicate-free, and closed") {
    std::mt19937 rng(5);
    for (const Graph& g : {cycle_graph(6), complete_bipartite_graph(2, 3), star_graph(4),
                           power(path_graph(5), 2)}) {
        auto auts = enumerate_automorphisms(g);
        CHECK(std::is_sorted(auts.elements.begin(), auts.elements.end()));
        CHECK(std::adjacent_find(auts.elements.begin(), auts.elements.end()) ==
              auts.elements.end());
        CHECK(auts.contains(Permutation::identity(g.vertex_count())));
        for (int trial = 0; trial < 100; ++trial) {
            const auto& a = auts.elements[rng() % auts.elements.size()];
            const auto& b = auts.elements[rng() % auts.elements.size()];
            CHECK(auts.contains(compose(a, b)));
            CHECK(auts.contains(a.inverse()));
        }
        for (const auto& p : auts.elements) CHECK(is_automorphism(g, p));
    }
}

TEST_CASE("caps are loud") {
    CHECK_THROWS_AS(enumerate_automorphisms(complete_graph(5), AutLimits{10, 64}),
                    CapExceeded);
    CHECK_THROWS_AS(enumerate_automorphisms(star_graph(9), AutLimits{100, 64}), CapExceeded);
    CHECK_THROWS_AS(enumerate_automorphisms(path_graph(10), AutLimits{1000, 8}), CapExceeded);
}

TEST_CASE("edge_action") {
    Graph p3 = path_graph(3);
    CHECK(edge_action(p3, Permutation::identity(3)) == std::vector<int>{0, 1});
    CHECK(edge_action(p3, Permutation({2, 1, 0})) == std::vector<int>{1, 0});

    // Rotation of C_4 cycles all four edges.
    auto act = edge_action(cycle_graph(4), Permutation({1, 2, 3, 0}));
    int steps = 0, e = 0;
    do {
        e = act[e];
        ++steps;
    } while (e != 0);
    CHECK(steps == 4);

    CHECK_THROWS_AS(edge_action(p3, Permutation({1, 0, 2})), std::invalid_argument);
}

TEST_CASE("restrict_to_base") {
    // Any automorphism of the spider restricts to Aut(K_{1,3}).
    SubdividedGraph spider = subdivide(star_graph(3), 2);
    auto base_auts = enumerate_automorphisms(star_graph(3));
    for (const auto& p : enumerate_automorphisms(spider.graph).elements) {
        Permutation q = restrict_to_base(spider, p);
        CHECK(base_auts.contains(q));
    }

    // Reversal of P_3^{1/2} = P_5 restricts to the reversal of P_3.
    SubdividedGraph p3sub = subdivide(path_graph(3), 2);
    Permutation reversal({2, 1, 0, 4, 3});
    CHECK(is_automorphism(p3sub.graph, reversal));
    CHECK(restrict_to_base(p3sub, reversal) == Permutation({2, 1, 0}));

    SubdividedGraph k4sub = subdivide(complete_graph(4), 3);
    CHECK(restrict_to_base(k4sub, Permutation::identity(k4sub.graph.vertex_count())) ==
          Permutation::identity(4));

    // A cycle base rotates original vertices onto internal ones.
    SubdividedGraph c3sub = subdivide(cycle_graph(3), 2);
    bool saw_breach = false;
    for (const auto& p : enumerate_automorphisms(c3sub.graph).elements) {
        try {
            restrict_to_base(c3sub, p);
        } catch (const std::invalid_argument&) {
            saw_breach = true;
        }
    }
    CHECK(saw_breach);
}

TEST_CASE("is_subgroup") {
    auto p5 = enumerate_automorphisms(path_graph(5));
    auto p5_2 = enumerate_automorphisms(power(path_graph(5), 2));
    CHECK(is_subgroup(p5, p5_2));

    auto c5 = enumerate_automorphisms(cycle_graph(5));
    auto c5_2 = enumerate_automorphisms(power(cycle_graph(5), 2));
    CHECK(c5_2.order() == 120);
    CHECK(is_subgroup(c5, c5_2));

    AutomorphismSet trivial;
    trivial.elements.push_back(Permutation::identity(5));
    CHECK(is_subgroup(trivial, c5));

    auto k2 = enumerate_automorphisms(complete_graph(2));
    CHECK_THROWS_AS(is_subgroup(k2, c5), std::invalid_argument);
}

TEST_CASE("cycle power automorphism orders around the theorem boundary") {
    // n = 2k+1 gives a complete power; n = 2k+2 gives the cocktail-party
    // graph, whose group is the signed permutations.
    CHECK(enumerate_automorphisms(power(cycle_graph(5), 2)).order() == 120);
    CHECK(enumerate_automorphisms(power(cycle_graph(6), 2)).order() == 48);
    CHECK(enumerate_automorphisms(power(cycle_graph(7), 2)).order() == 14);
    CHECK(enumerate_automorphisms(power(cycle_graph(8), 2)).order() == 16);
    CHECK(enumerate_automorphisms(power(cycle_graph(7), 3)).order() == 5040);
    CHECK(enumerate_automorphisms(power(cycle_graph(8), 3)).order() == 384);
}

TEST_CASE("automorphism order of subdivisions matches the base for non-cycles") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& g : connected_graphs(n)) {
            if (is_cycle_graph_shape(g)) continue;
            int base = enumerate_automorphisms(g).order();
            for (int k = 2; k <= 3; ++k)
                CHECK(enumerate_automorphisms(subdivide(g, k).graph).order() == base);
        }
    }
}

TEST_CASE("labeling_stabilizer") {
    Graph p4 = path_graph(4);
    auto auts = enumerate_automorphisms(p4);

    auto all_same = Labeling::vertex(1, {1, 1, 1, 1});
    CHECK(labeling_stabilizer(auts, all_same, p4).order() == auts.order());

    auto distinct = Labeling::vertex(4, {1, 2, 3, 4});
    auto stab = labeling_stabilizer(auts, distinct, p4);
    CHECK(stab.order() == 1);
    CHECK(stab.elements[0].is_identity());

    auto marked = Labeling::vertex(2, {1, 1, 2, 1});
    CHECK(labeling_stabilizer(auts, marked, p4).order() == 1);

    auto incomplete = Labeling::vertex(2, {1, 1});
    CHECK_THROWS_AS(labeling_stabilizer(auts, incomplete, p4), std::invalid_argument);
}

TEST_CASE("enumerator counts and determinism") {
    const int connected_counts[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<int>(connected_graphs(n).size()) == connected_counts[n]);
    const int all_counts[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<int>(all_graphs(n).size()) == all_counts[n]);

    auto three = connected_graphs(3);
    REQUIRE(three.size() == 2);
    CHECK(isomorphic_small(three[0], path_graph(3)));
    CHECK(isomorphic_small(three[1], cycle_graph(3)));

    CHECK_THROWS_AS(connected_graphs(8), std::invalid_argument);
    CHECK_THROWS_AS(sampled_connected_graphs(7, 5, 1), std::invalid_argument);

    auto s1 = sampled_connected_graphs(8, 5, 99);
    auto s2 = sampled_connected_graphs(8, 5, 99);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(graph_equal(s1[i], s2[i]));
}
