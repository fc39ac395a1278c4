#include <vector>

#include "doctest.h"
#include "dskp/error.hpp"
#include "dskp/generators.hpp"
#include "dskp/oracle.hpp"
#include "dskp/vc_dp.hpp"

using namespace dskp;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> as_pairs(const ParetoSet& s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& p : s.pairs()) out.emplace_back(p.weight, p.profit);
    return out;
}

// deterministic sampling of valid covers beyond the minimum one: the minimum
// cover plus random extra vertices
Bitset random_cover(Rng& rng, const Graph& g) {
    Bitset cover = min_vertex_cover(g);
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (!cover.test(v) && rng.bernoulli(0.4)) cover.set(v);
    return cover;
}

}  // namespace

TEST_CASE("vck: star with the center as cover") {
    DskpInstance inst;
    inst.graph = star_graph(4);
    inst.weights = {1, 1, 1, 1};
    inst.profits = {1, 1, 1, 1};
    inst.capacity = 4;
    Bitset cover(4);
    cover.set(0);
    CHECK(as_pairs(vck_pareto(inst, cover)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
}

TEST_CASE("vck: two-vertex edge, cover {a}") {
    DskpInstance inst;
    inst.graph = Graph::from_edges(2, {{0, 1}});
    inst.weights = {1, 2};
    inst.profits = {5, 1};
    inst.capacity = 3;
    Bitset cover(2);
    cover.set(0);
    CHECK(vck_pareto(inst, cover) == oracle_pareto(inst));
    CHECK(as_pairs(vck_pareto(inst, cover)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 5}, {3, 6}});
}

TEST_CASE("vck: edgeless graph forces every vertex") {
    DskpInstance inst;
    inst.graph = Graph::from_edges(3, {});
    inst.weights = {2, 3, 4};
    inst.profits = {1, 1, 1};
    inst.capacity = 9;
    CHECK(as_pairs(vck_pareto(inst, Bitset(3))) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{9, 3}});
    inst.capacity = 8;  // total weight no longer fits
    CHECK(vck_pareto(inst, Bitset(3)).empty());
}

TEST_CASE("vck: rejects non-covers and oversized covers") {
    DskpInstance inst;
    inst.graph = path_graph(3);
    inst.weights = {1, 1, 1};
    inst.profits = {1, 1, 1};
    inst.capacity = 3;
    Bitset not_cover(3);
    not_cover.set(0);  // edge 1-2 uncovered
    CHECK_THROWS_WITH_AS(vck_pareto(inst, not_cover), doctest::Contains("not a vertex cover"),
                         Error);
    Bitset cover(3);
    cover.set(1);
    VcDpOptions tight;
    tight.max_cover = 0;
    CHECK_THROWS_WITH_AS(vck_pareto(inst, cover, tight), doctest::Contains("cover too large"),
                         Error);
}

TEST_CASE("vck: oracle equivalence on 200 random graphs") {
    Rng rng(9001);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 10));
        DskpInstance inst = random_instance(rng, gnp_graph(rng, n, 0.4), 7, 7,
                                            rng.uniform(0, 25), 0);
        CHECK(vck_pareto(inst, min_vertex_cover(inst.graph)) == oracle_pareto(inst));
    }
}

TEST_CASE("vck: any valid cover gives the identical frontier") {
    Rng rng(9002);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 10));
        DskpInstance inst = random_instance(rng, gnp_graph(rng, n, 0.4), 7, 7,
                                            rng.uniform(0, 25), 0);
        ParetoSet reference = vck_pareto(inst, min_vertex_cover(inst.graph));
        for (int alt = 0; alt < 3; ++alt)
            CHECK(vck_pareto(inst, random_cover(rng, inst.graph)) == reference);
    }
}

TEST_CASE("vck: subset loop runs exactly 2^|cover| times") {
    Rng rng(9003);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 9));
        DskpInstance inst = random_instance(rng, gnp_graph(rng, n, 0.4), 6, 6,
                                            rng.uniform(0, 20), 0);
        Bitset cover = random_cover(rng, inst.graph);
        VcDpStats stats;
        vck_pareto(inst, cover, {}, &stats);
        CHECK(stats.cover_subsets == (std::uint64_t{1} << cover.count()));
    }
}

TEST_CASE("vck: fold order cannot affect the frontier") {
    // the solver orders optional picks by coverage; permuting vertex ids
    // permutes that order, the frontier must not move
    Rng rng(9004);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 9));
        DskpInstance inst = random_instance(rng, gnp_graph(rng, n, 0.4), 6, 6,
                                            rng.uniform(0, 20), 0);
        // relabel vertices by the permutation v -> n-1-v
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : inst.graph.edges()) edges.emplace_back(n - 1 - u, n - 1 - v);
        DskpInstance relabeled;
        relabeled.graph = Graph::from_edges(n, edges);
        relabeled.weights.assign(n, 0);
        relabeled.profits.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            relabeled.weights[n - 1 - v] = inst.weights[v];
            relabeled.profits[n - 1 - v] = inst.profits[v];
        }
        relabeled.capacity = inst.capacity;
        ParetoSet a = vck_pareto(inst, min_vertex_cover(inst.graph));
        ParetoSet b = vck_pareto(relabeled, min_vertex_cover(relabeled.graph));
        CHECK(a == b);
    }
}

TEST_CASE("vck: witnesses verify") {
    Rng rng(9005);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 9));
        DskpInstance inst = random_instance(rng, gnp_graph(rng, n, 0.4), 6, 6,
                                            rng.uniform(0, 20), 0);
        for (const auto& p : vck_pareto(inst, min_vertex_cover(inst.graph)).pairs()) {
            REQUIRE(p.witness.has_value());
            CHECK(inst.set_weight(*p.witness) == p.weight);
            CHECK(inst.set_profit(*p.witness) == p.profit);
            CHECK(is_dominating_set(inst.graph, *p.witness));
        }
    }
}
