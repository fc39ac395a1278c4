#include <vector>

#include "doctest.h"
#include "dskp/error.hpp"
#include "dskp/generators.hpp"
#include "dskp/oracle.hpp"
#include "dskp/tree_dp.hpp"

using namespace dskp;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> as_pairs(const ParetoSet& s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& p : s.pairs()) out.emplace_back(p.weight, p.profit);
    return out;
}

DskpInstance random_tree_instance(Rng& rng, int max_n) {
    const int n = static_cast<int>(rng.uniform(1, max_n));
    return random_instance(rng, random_tree(rng, n), 8, 8, rng.uniform(0, 20), 0);
}

}  // namespace

TEST_CASE("tree_dp: unit path") {
    DskpInstance inst;
    inst.graph = path_graph(3);
    inst.weights = {1, 1, 1};
    inst.profits = {1, 1, 1};
    inst.capacity = 3;
    CHECK(as_pairs(tree_dp_pareto(inst, 0)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("tree_dp: figure-1 star rooted at the center") {
    DskpInstance fig = figure1_instance();
    CHECK(tree_dp_pareto(fig, 0).empty());
    fig.capacity = 5;
    CHECK(as_pairs(tree_dp_pareto(fig, 0)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 5}});
}

TEST_CASE("tree_dp: single vertex") {
    DskpInstance inst;
    inst.graph = path_graph(1);
    inst.weights = {2};
    inst.profits = {7};
    inst.capacity = 2;
    CHECK(as_pairs(tree_dp_pareto(inst, 0)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 7}});
    inst.capacity = 1;
    CHECK(tree_dp_pareto(inst, 0).empty());
}

TEST_CASE("tree_dp: rejects non-trees and non-plain variants") {
    DskpInstance cyc;
    cyc.graph = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    cyc.weights = {1, 1, 1};
    cyc.profits = {1, 1, 1};
    cyc.capacity = 3;
    CHECK_THROWS_AS(tree_dp_pareto(cyc, 0), Error);

    DskpInstance disconnected;
    disconnected.graph = Graph::from_edges(2, {});
    disconnected.weights = {1, 1};
    disconnected.profits = {1, 1};
    CHECK_THROWS_AS(tree_dp_pareto(disconnected, 0), Error);

    DskpInstance exact;
    exact.graph = path_graph(2);
    exact.weights = {1, 1};
    exact.profits = {1, 1};
    exact.capacity = 2;
    exact.variant = Variant::ExactK;
    exact.k = 1;
    CHECK_THROWS_AS(tree_dp_pareto(exact, 0), Error);
}

TEST_CASE("tree_dp: oracle equivalence on 300 random trees") {
    Rng rng(1001);
    for (int trial = 0; trial < 300; ++trial) {
        DskpInstance inst = random_tree_instance(rng, 12);
        CHECK(tree_dp_pareto(inst, 0) == oracle_pareto(inst));
    }
}

TEST_CASE("tree_dp: root invariance") {
    Rng rng(1002);
    for (int trial = 0; trial < 50; ++trial) {
        DskpInstance inst = random_tree_instance(rng, 12);
        const int n = inst.vertex_count();
        ParetoSet reference = tree_dp_pareto(inst, 0);
        for (int r = 0; r < 3; ++r)
            CHECK(tree_dp_pareto(inst, static_cast<int>(rng.uniform(0, n - 1))) == reference);
    }
}

TEST_CASE("tree_dp: witnesses verify") {
    Rng rng(1003);
    for (int trial = 0; trial < 60; ++trial) {
        DskpInstance inst = random_tree_instance(rng, 12);
        for (const auto& p : tree_dp_pareto(inst, 0).pairs()) {
            REQUIRE(p.witness.has_value());
            CHECK(inst.set_weight(*p.witness) == p.weight);
            CHECK(inst.set_profit(*p.witness) == p.profit);
            CHECK(is_dominating_set(inst.graph, *p.witness));
        }
    }
}

TEST_CASE("tree_dp: deep path does not overflow the stack") {
    const int n = 100000;
    DskpInstance inst;
    inst.graph = path_graph(n);
    inst.weights.assign(n, 1);
    inst.profits.assign(n, 1);
    inst.capacity = 3;  // gamma(P_100000) is far larger, frontier stays empty
    TreeDpOptions opts;
    opts.witnesses = WitnessMode::Off;
    CHECK(tree_dp_pareto(inst, 0, opts).empty());
}

TEST_CASE("tree_dp: oracle equivalence with zero weights present") {
    Rng rng(1005);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 11));
        DskpInstance inst = random_instance(rng, random_tree(rng, n), 4, 8,
                                            rng.uniform(0, 12), 0);
        for (auto& w : inst.weights)
            if (rng.bernoulli(0.5)) w = 0;
        CHECK(tree_dp_pareto(inst, 0) == oracle_pareto(inst));
    }
}

TEST_CASE("tree_dp: pair-operation count stays within the stated bound") {
    Rng rng(1004);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 40));
        DskpInstance inst = random_instance(rng, random_tree(rng, n), 8, 8,
                                            rng.uniform(1, 60), 0);
        TreeDpStats stats;
        TreeDpOptions opts;
        opts.witnesses = WitnessMode::Off;
        tree_dp_pareto(inst, 0, opts, &stats);
        const std::int64_t m = std::min(inst.capacity, inst.total_profit());
        // per child: four cross folds of antichains no longer than m+1, plus
        // slack for the per-vertex initialization
        const std::uint64_t bound =
            8 * static_cast<std::uint64_t>(inst.graph.edge_count() + n) *
            static_cast<std::uint64_t>(m + 1) * static_cast<std::uint64_t>(m + 1);
        CHECK(stats.pair_ops <= bound);
    }
}
