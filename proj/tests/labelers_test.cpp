#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "graphsym/distinguishing.hpp"
#include "graphsym/enumerate.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/labelers.hpp"
#include "graphsym/power.hpp"

using namespace graphsym;

namespace {

// Independent re-certification of what the labelers already certified.
bool certified(const LabelerResult& r) {
    auto auts = enumerate_automorphisms(r.target);
    return is_distinguishing(r.target, auts, r.labeling);
}

}  // namespace

TEST_CASE("star subdivision labeling fixed instances") {
    // m=3, k=2, s=2: legs get (1,1), (1,2), (2,1) in lexicographic order.
    auto r = star_subdivision_labeling(3, 2, 2);
    CHECK(certified(r));
    const auto& vl = r.labeling.vertex_labels;
    // center 0, leaves 1..3, internals 4..6 (one per leg, ordered by leg).
    CHECK(vl[0] == 1);
    CHECK(std::vector<int>{vl[4], vl[1]} == std::vector<int>{1, 1});
    CHECK(std::vector<int>{vl[5], vl[2]} == std::vector<int>{1, 2});
    CHECK(std::vector<int>{vl[6], vl[3]} == std::vector<int>{2, 1});

    // m=2, k=1: K_{1,2} with leaves labeled 1 and 2.
    auto r2 = star_subdivision_labeling(2, 1, 2);
    CHECK(certified(r2));
    CHECK(r2.labeling.vertex_labels == std::vector<int>{1, 1, 2});

    // m=4, k=2, s=2: all four tuples over {1,2}.
    auto r3 = star_subdivision_labeling(4, 2, 2);
    CHECK(certified(r3));
    CHECK(r3.labels_used == 2);

    // Deficit: s=2, k=2 supplies 4 tuples, not 5.
    CHECK_THROWS_AS(star_subdivision_labeling(5, 2, 2), ConstructionError);
    CHECK_THROWS_AS(star_subdivision_labeling(3, 2, 1), std::invalid_argument);
}

TEST_CASE("star subdivision labeling matches the exact distinguishing number") {
    for (int m = 3; m <= 6; ++m) {
        for (int k = 2; k <= 3; ++k) {
            int s = sphere_bound(k, m);
            auto r = star_subdivision_labeling(m, k, s);
            CHECK(certified(r));
            int exact = distinguishing_number(r.target).value;
            CHECK(exact == s);
            CHECK(r.labels_used <= s);
        }
    }
}

TEST_CASE("bfs sphere labeling on fixed instances") {
    auto p4 = bfs_sphere_labeling(path_graph(4), 2);
    CHECK(certified(p4));
    CHECK(p4.labels_used == 2);
    CHECK(p4.bound_value == 2);

    // Stars delegate to the star construction.
    auto star = bfs_sphere_labeling(star_graph(3), 2);
    CHECK(certified(star));
    CHECK(star.labels_used <= sphere_bound(2, 3));

    auto k4 = bfs_sphere_labeling(complete_graph(4), 2);
    CHECK(certified(k4));
    CHECK(k4.bound_value == sphere_bound(2, 3));

    // Cycles use the asymmetric pattern, still two labels.
    for (int n = 3; n <= 6; ++n)
        for (int k = 2; k <= 3; ++k) {
            auto c = bfs_sphere_labeling(cycle_graph(n), k);
            CHECK(certified(c));
            CHECK(c.labels_used == 2);
        }

    // A dominating max-degree vertex leaves sphere 2 empty.
    auto f2 = bfs_sphere_labeling(fan2_graph(), 2);
    CHECK(certified(f2));
    CHECK(f2.labels_used <= f2.bound_value);

    CHECK_THROWS_AS(bfs_sphere_labeling(path_graph(2), 2), std::invalid_argument);
    CHECK_THROWS_AS(bfs_sphere_labeling(path_graph(4), 1), std::invalid_argument);
}

TEST_CASE("bfs sphere labeling certifies across the full grid") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& g : connected_graphs(n)) {
            for (int k = 2; k <= 3; ++k) {
                auto r = bfs_sphere_labeling(g, k);
                CHECK(certified(r));
                CHECK(r.labels_used <= sphere_bound(k, g.max_degree()));
            }
        }
    }
}

TEST_CASE("edge to vertex transfer") {
    // K_{1,3} at k=1: transfer a distinguishing edge labeling of the star
    // itself into a vertex labeling of its 2-subdivision.
    Graph star = star_graph(3);
    auto el = distinguishing_index(star);
    REQUIRE(el.has_value());
    CHECK(el->value == 3);
    auto r = edge_to_vertex_transfer(star, 1, el->certificate);
    CHECK(certified(r));
    CHECK(r.labels_used <= 3);

    // Labels used are a subset of the input labels.
    std::set<int> used(r.labeling.vertex_labels.begin(), r.labeling.vertex_labels.end());
    std::set<int> input(el->certificate.edge_labels.begin(), el->certificate.edge_labels.end());
    input.insert(1);  // original vertices get label 1
    for (int x : used) CHECK(input.count(x) == 1);

    // P_3 at k=2.
    Graph p3 = path_graph(3);
    auto el2 = distinguishing_index(subdivide(p3, 2).graph);
    REQUIRE(el2.has_value());
    auto r2 = edge_to_vertex_transfer(p3, 2, el2->certificate);
    CHECK(certified(r2));
    CHECK(r2.target.vertex_count() == subdivide(p3, 3).graph.vertex_count());

    // Uncertified input is rejected.
    Labeling bad = Labeling::edge(1, std::vector<int>(star.edge_count(), 1));
    CHECK_THROWS_AS(edge_to_vertex_transfer(star, 1, bad), std::invalid_argument);
}

TEST_CASE("transfer bound versus the subdivision's distinguishing number") {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& g : connected_graphs(n)) {
            if (is_cycle_graph_shape(g)) continue;
            for (int k = 1; k <= 2; ++k) {
                auto el = distinguishing_index(subdivide(g, k).graph);
                REQUIRE(el.has_value());
                auto r = edge_to_vertex_transfer(g, k, el->certificate);
                CHECK(certified(r));
                // D(G^{1/(k+1)}) <= D'(G^{1/k}) realized constructively.
                CHECK(r.labels_used <= el->value);
            }
        }
    }
}

TEST_CASE("pair edge labeling") {
    // P_4 has a 2-class distinguishing edge labeling; two classes need pairs
    // from three labels: (1,2) and (1,3).
    Graph p4 = path_graph(4);
    auto el = distinguishing_index(p4);
    REQUIRE(el.has_value());
    CHECK(el->value == 2);
    auto r = pair_edge_labeling(p4, el->certificate);
    CHECK(certified(r));
    CHECK(r.labels_used <= 3);
    CHECK(r.bound_value == pair_bound(2));

    // Each superedge pair is ordered with distinct components and distinct
    // unordered supports across classes.
    SubdividedGraph sg = subdivide(p4, 2);
    std::set<std::pair<int, int>> supports;
    for (const auto& se : sg.superedges) {
        auto path = sg.superedge_path(se);
        int c1 = r.labeling.edge_labels[sg.graph.edge_index(path[0], path[1])];
        int c2 = r.labeling.edge_labels[sg.graph.edge_index(path[1], path[2])];
        CHECK(c1 != c2);
        supports.insert({std::min(c1, c2), std::max(c1, c2)});
    }
    // 2 classes -> 2 distinct supports.
    CHECK(supports.size() == 2);

    auto star_el = distinguishing_index(star_graph(3));
    REQUIRE(star_el.has_value());
    auto r2 = pair_edge_labeling(star_graph(3), star_el->certificate);
    CHECK(certified(r2));
}

TEST_CASE("tuple edge labeling") {
    Graph p4 = path_graph(4);
    auto el = distinguishing_index(p4);
    REQUIRE(el.has_value());
    auto r = tuple_edge_labeling(p4, 3, el->certificate);
    CHECK(certified(r));

    // All-distinct labels give three classes; A(3,2) = 3 pairs suffice.
    Labeling distinct = Labeling::edge(3, {1, 2, 3});
    REQUIRE(is_distinguishing(p4, enumerate_automorphisms(p4), distinct));
    auto r3 = tuple_edge_labeling(p4, 2, distinct);
    CHECK(certified(r3));
    CHECK(r3.bound_value == 3);

    // Superedge tuples are never palindromic: flipping one superedge in
    // K_{1,3}^{1/3} must change the labeling.
    Graph star = star_graph(3);
    auto sel = distinguishing_index(star);
    REQUIRE(sel.has_value());
    auto rs = tuple_edge_labeling(star, 3, sel->certificate);
    CHECK(certified(rs));
    SubdividedGraph sg = subdivide(star, 3);
    for (const auto& se : sg.superedges) {
        auto path = sg.superedge_path(se);
        std::vector<int> tuple;
        for (int i = 0; i + 1 < static_cast<int>(path.size()); ++i)
            tuple.push_back(rs.labeling.edge_labels[sg.graph.edge_index(path[i], path[i + 1])]);
        std::vector<int> rev(tuple.rbegin(), tuple.rend());
        CHECK(tuple != rev);
    }

    CHECK_THROWS_AS(tuple_edge_labeling(p4, 1, el->certificate), std::invalid_argument);
}

TEST_CASE("path power labeling") {
    auto r62 = path_power_labeling(6, 2);
    CHECK(certified(r62));
    CHECK(r62.labels_used == 2);
    CHECK(r62.bound_value == 2);
    CHECK(r62.notes.empty());

    // n=5, k=3: three labels, while the two-branch formula claims 2k-n = 1.
    auto r53 = path_power_labeling(5, 3);
    CHECK(certified(r53));
    CHECK(r53.labels_used == 3);
    CHECK(r53.bound_value == 1);
    CHECK_FALSE(r53.notes.empty());
    CHECK(distinguishing_number(power(path_graph(5), 3)).value == 3);

    // P_4^3 = K_4 takes four labels.
    auto r43 = path_power_labeling(4, 3);
    CHECK(certified(r43));
    CHECK(r43.labels_used == 4);

    CHECK_THROWS_AS(path_power_labeling(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(path_power_labeling(5, 5), std::invalid_argument);
}

TEST_CASE("path power labeling certifies across the grid") {
    for (int n = 4; n <= 9; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            auto r = path_power_labeling(n, k);
            CHECK(certified(r));
        }
}
