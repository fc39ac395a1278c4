#include <vector>

#include "doctest.h"
#include "dskp/error.hpp"
#include "dskp/generators.hpp"
#include "dskp/oracle.hpp"
#include "naive.hpp"

using namespace dskp;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> as_pairs(const ParetoSet& s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& p : s.pairs()) out.emplace_back(p.weight, p.profit);
    return out;
}

DskpInstance unit_path3(std::int64_t s, std::int64_t d) {
    DskpInstance inst;
    inst.graph = path_graph(3);
    inst.weights = {1, 1, 1};
    inst.profits = {1, 1, 1};
    inst.capacity = s;
    inst.target = d;
    return inst;
}

}  // namespace

TEST_CASE("oracle_pareto: figure-1 star") {
    DskpInstance fig = figure1_instance();
    CHECK(oracle_pareto(fig).empty());  // every dominating set weighs >= 5

    fig.capacity = 5;
    CHECK(as_pairs(oracle_pareto(fig)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 5}});
}

TEST_CASE("oracle_pareto: unit path") {
    CHECK(as_pairs(oracle_pareto(unit_path3(3, 0))) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("oracle_pareto: agrees with the naive enumeration on all variants") {
    Rng rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 9));
        DskpInstance inst = random_instance(rng, gnp_graph(rng, n, 0.35), 8, 8,
                                            rng.uniform(0, 30), 0);
        const int which = trial % 3;
        if (which == 1) {
            inst.variant = Variant::ExactK;
            inst.k = static_cast<int>(rng.uniform(1, n));
        } else if (which == 2) {
            inst.variant = Variant::Minimal;
        }
        CHECK(oracle_pareto(inst) == naive::pareto(inst));
    }
}

TEST_CASE("oracle_pareto: witnesses verify") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 8));
        DskpInstance inst = random_instance(rng, gnp_graph(rng, n, 0.4), 6, 6,
                                            rng.uniform(0, 20), 0);
        for (const auto& p : oracle_pareto(inst).pairs()) {
            REQUIRE(p.witness.has_value());
            CHECK(inst.set_weight(*p.witness) == p.weight);
            CHECK(inst.set_profit(*p.witness) == p.profit);
            CHECK(is_dominating_set(inst.graph, *p.witness));
        }
    }
}

TEST_CASE("oracle_pareto: parallel partitions match single-threaded output") {
    Rng rng(88);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = static_cast<int>(rng.uniform(3, 10));
        DskpInstance inst = random_instance(rng, gnp_graph(rng, n, 0.3), 8, 8,
                                            rng.uniform(5, 30), 0);
        OracleOptions seq, par;
        par.jobs = 4;
        CHECK(oracle_pareto(inst, seq) == oracle_pareto(inst, par));
    }
}

TEST_CASE("oracle_pareto: size cap") {
    DskpInstance inst;
    inst.graph = path_graph(30);
    inst.weights.assign(30, 1);
    inst.profits.assign(30, 1);
    inst.capacity = 5;
    CHECK_THROWS_AS(oracle_pareto(inst), Error);
}

TEST_CASE("oracle_decide") {
    DskpInstance fig = figure1_instance();
    CHECK_FALSE(oracle_decide(fig).yes);  // s = d = 4

    fig.capacity = 5;
    fig.target = 5;
    Decision yes = oracle_decide(fig);
    CHECK(yes.yes);
    REQUIRE(yes.witness.has_value());
    CHECK(yes.witness->to_vector() == std::vector<int>{0});

    DskpInstance k3;
    k3.graph = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    k3.weights = {1, 1, 1};
    k3.profits = {1, 1, 1};
    k3.capacity = 1;
    k3.target = 1;
    Decision d = oracle_decide(k3);
    CHECK(d.yes);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->count() == 1);
}

TEST_CASE("oracle_min_dominating_set") {
    CHECK(oracle_min_dominating_set(star_graph(6)) == 1);
    CHECK(oracle_min_dominating_set(Graph::from_edges(4, {})) == 4);
    CHECK(oracle_min_dominating_set(path_graph(3)) == 1);
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 9));
        Graph g = gnp_graph(rng, n, 0.3);
        CHECK(oracle_min_dominating_set(g) == naive::min_dominating_size(g));
    }
}

TEST_CASE("oracle_max_minimal_dominating_set") {
    CHECK(oracle_max_minimal_dominating_set(star_graph(4)) == 3);  // the leaves
    CHECK(oracle_max_minimal_dominating_set(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) == 1);
    Rng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 8));
        Graph g = gnp_graph(rng, n, 0.35);
        CHECK(oracle_max_minimal_dominating_set(g) == naive::max_minimal_dominating_size(g));
    }
}

TEST_CASE("knapsack_01") {
    const std::vector<std::int64_t> sizes{2, 3}, values{3, 4};
    CHECK(as_pairs(knapsack_01(sizes, values, 5)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {2, 3}, {3, 4}, {5, 7}});
    CHECK(as_pairs(knapsack_01({}, {}, 9)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}});
    const std::vector<std::int64_t> big{7}, val{9};
    CHECK(as_pairs(knapsack_01(big, val, 5)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}});
    Rng rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(0, 9));
        std::vector<std::int64_t> s(n), v(n);
        for (int i = 0; i < n; ++i) {
            s[i] = rng.uniform(0, 9);
            v[i] = rng.uniform(0, 9);
        }
        const std::int64_t cap = rng.uniform(0, 25);
        CHECK(knapsack_01(s, v, cap) == naive::knapsack(s, v, cap));
    }
}

TEST_CASE("min_vertex_cover") {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    Bitset c = min_vertex_cover(edge);
    CHECK(c.count() == 1);
    CHECK(is_vertex_cover(edge, c));

    Bitset star_cover = min_vertex_cover(star_graph(6));
    CHECK(star_cover.count() == 1);
    CHECK(star_cover.test(0));

    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(min_vertex_cover(c4).count() == 2);

    Rng rng(16);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 9));
        Graph g = gnp_graph(rng, n, 0.4);
        Bitset cover = min_vertex_cover(g);
        CHECK(is_vertex_cover(g, cover));
        CHECK(cover.count() == naive::min_vertex_cover_size(g));
    }
}

TEST_CASE("oracle: empty graph") {
    DskpInstance empty;
    empty.capacity = 2;
    CHECK(as_pairs(oracle_pareto(empty)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}});
}
