#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <random>

#include "extremal/families.hpp"
#include "extremal/graph.hpp"
#include "extremal/invariants.hpp"
#include "extremal/verify.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {
const Graph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const Graph kC5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
const Graph kK4MinusEdge(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}  // namespace

TEST_CASE("distances") {
    const Graph p4 = path_graph(4);
    const auto d = all_pairs_distance(p4);
    CHECK(d[0][1] == 1);
    CHECK(d[0][3] == 3);
    CHECK(d[2][2] == 0);

    const Graph two_parts = disjoint_union(path_graph(2), path_graph(2));
    CHECK(all_pairs_distance(two_parts)[0][2] == kInfiniteDistance);
}

TEST_CASE("distances agree with Floyd-Warshall on all graphs with n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t total = ConnectedGraphEnumerator::mask_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = ConnectedGraphEnumerator::graph_from_mask(n, mask);
            CHECK(all_pairs_distance(g) == oracles::naive_distances(g));
        }
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(build_gamma(5, 3)) == 5);
    CHECK(diameter(build_omega(3, 2, 1)) == 2);
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(disjoint_union(path_graph(2), path_graph(2))) == kInfiniteDistance);
    CHECK_THROWS_AS(diameter(Graph(1)), std::invalid_argument);
}

TEST_CASE("kappa examples") {
    CHECK(kappa(build_gamma(3, 4)) == 1);
    CHECK(kappa(build_gamma(2, 2)) == 1);
    CHECK(kappa(build_omega(3, 1, 2)) == 3);
    CHECK(kappa(kC4) == 2);
    CHECK(kappa(complete_graph(4)) == 3);  // convention
    CHECK(kappa(disjoint_union(path_graph(2), path_graph(2))) == 0);
    CHECK_THROWS_AS(kappa(Graph(0)), std::invalid_argument);
}

TEST_CASE("kappa_bruteforce examples") {
    CHECK(kappa_bruteforce(path_graph(3)) == 1);
    CHECK(kappa_bruteforce(kK4MinusEdge) == 2);
    CHECK(kappa_bruteforce(complete_graph(4)) == 3);
}

TEST_CASE("kappa equals brute force on all connected graphs with n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        ConnectedGraphEnumerator en(n);
        while (auto g = en.next()) CHECK(kappa(*g) == kappa_bruteforce(*g));
    }
}

TEST_CASE("free vertices") {
    // star-like gamma with d=2: the 4 non-center vertices are free
    const Graph star = build_gamma(2, 4);
    CHECK(mask_to_vertices(free_vertices(star)) == std::vector<int>{0, 2, 3, 4});
    CHECK(free_vertices(kC4) == 0);
    CHECK(free_vertices(complete_graph(5)) == complete_graph(5).vertex_mask());
    CHECK(free_vertices(Graph(3)) == Graph(3).vertex_mask());  // isolated vertices are free
}

TEST_CASE("free vertices match the naive all-pairs check on all graphs with n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t total = ConnectedGraphEnumerator::mask_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = ConnectedGraphEnumerator::graph_from_mask(n, mask);
            CHECK(mask_to_vertices(free_vertices(g)) == oracles::naive_free_vertices(g));
        }
    }
}

namespace {

bool ordering_has_clique_property(const Graph& g, const std::vector<int>& order) {
    VertexMask earlier = 0;
    for (int v : order) {
        const auto nbrs = mask_to_vertices(g.neighbors(v) & earlier);
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                if (!g.has_edge(nbrs[a], nbrs[b])) return false;
        earlier |= vertex_bit(v);
    }
    return true;
}

bool cycle_is_induced_and_long(const Graph& g, const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 4) return false;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            const bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
            if (g.has_edge(cycle[a], cycle[b]) != consecutive) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("chordality examples") {
    const auto c4 = chordality(kC4);
    CHECK_FALSE(c4.is_chordal);
    REQUIRE(c4.induced_cycle.has_value());
    CHECK(cycle_is_induced_and_long(kC4, *c4.induced_cycle));
    CHECK_FALSE(c4.peo.has_value());

    for (const Graph& tree : {path_graph(5), build_gamma(2, 5), build_gamma(4, 3)})
        CHECK(chordality(tree).is_chordal);

    CHECK(chordality(build_gd(parse_gd_spec("d=4; hv=1; H2=2; H23=1"))).is_chordal);
    CHECK(chordality(build_fq(parse_fq_spec("q=3; parts=2,2,1"))).is_chordal);
    CHECK(chordality(Graph(0)).is_chordal);
}

TEST_CASE("chordality matches the induced-cycle oracle on all graphs with n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t total = ConnectedGraphEnumerator::mask_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = ConnectedGraphEnumerator::graph_from_mask(n, mask);
            const auto result = chordality(g);
            CHECK(result.is_chordal == !oracles::naive_has_long_induced_cycle(g));
            if (result.is_chordal) {
                REQUIRE(result.peo.has_value());
                CHECK(ordering_has_clique_property(g, *result.peo));
            } else {
                REQUIRE(result.induced_cycle.has_value());
                CHECK(cycle_is_induced_and_long(g, *result.induced_cycle));
            }
        }
    }
}

TEST_CASE("invariant_report examples") {
    const auto p4 = invariant_report(path_graph(4));
    CHECK(p4.diameter == 3);
    CHECK(p4.kappa == 1);
    CHECK(p4.free_count == 2);
    CHECK(p4.gap == 0);

    const auto diamond = invariant_report(kK4MinusEdge);
    CHECK(diamond.diameter == 2);
    CHECK(diamond.kappa == 2);
    CHECK(diamond.free_count == 2);
    CHECK(diamond.gap == 0);

    const auto c5 = invariant_report(kC5);
    CHECK(c5.diameter == 2);
    CHECK(c5.kappa == 2);
    CHECK(c5.free_count == 0);
    CHECK(c5.gap == 3);

    const auto k4 = invariant_report(complete_graph(4));
    CHECK(k4.is_complete);
    CHECK(k4.diameter == 1);
    CHECK_FALSE(k4.gap.has_value());

    const auto split = invariant_report(disjoint_union(path_graph(2), path_graph(2)));
    CHECK(split.diameter == kInfiniteDistance);
    CHECK(split.kappa == 0);
    CHECK_FALSE(split.gap.has_value());

    CHECK_THROWS_AS(invariant_report(Graph(1)), std::invalid_argument);
}

TEST_CASE("complete iff diameter one") {
    for (int n = 2; n <= 5; ++n) {
        ConnectedGraphEnumerator en(n);
        while (auto g = en.next()) CHECK((diameter(*g) == 1) == is_complete(*g));
    }
}

TEST_CASE("gap is nonnegative on all connected non-complete graphs with n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        ConnectedGraphEnumerator en(n);
        while (auto g = en.next()) {
            if (is_complete(*g)) continue;
            const auto rep = invariant_report(*g);
            CHECK(rep.gap.value() >= 0);
            if (rep.diameter >= 3 && rep.kappa >= 2) CHECK(rep.gap.value() > 0);
        }
    }
}

TEST_CASE("randomized cross-checks on larger graphs") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 4);  // 7..10
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 100 < 40) edges.emplace_back(i, j);
        const Graph g(n, edges);
        CHECK(mask_to_vertices(free_vertices(g)) == oracles::naive_free_vertices(g));
        CHECK(all_pairs_distance(g) == oracles::naive_distances(g));
        CHECK(chordality(g).is_chordal == !oracles::naive_has_long_induced_cycle(g));
        if (is_connected(g) && !is_complete(g)) CHECK(kappa(g) == kappa_bruteforce(g));
    }
}

TEST_CASE("report serialization") {
    const auto c5 = invariant_report(kC5);
    CHECK(to_text(c5) ==
          "n: 5\n"
          "diameter: 2\n"
          "kappa: 2\n"
          "free_set:\n"
          "free_count: 0\n"
          "is_connected: true\n"
          "is_complete: false\n"
          "is_chordal: false\n"
          "gap: 3\n");

    const auto record = nlohmann::json::parse(to_record(c5));
    CHECK(record["n"] == 5);
    CHECK(record["diameter"] == 2);
    CHECK(record["kappa"] == 2);
    CHECK(record["free_set"].empty());
    CHECK(record["gap"] == 3);

    const auto p4 = invariant_report(path_graph(4));
    CHECK(to_text(p4).find("free_set: 1,4\n") != std::string::npos);

    const auto k4 = nlohmann::json::parse(to_record(invariant_report(complete_graph(4))));
    CHECK_FALSE(k4.contains("gap"));

    const auto split = invariant_report(disjoint_union(path_graph(2), path_graph(2)));
    CHECK(to_text(split).find("diameter: infinite\n") != std::string::npos);
    CHECK(nlohmann::json::parse(to_record(split))["diameter"].is_null());
}
