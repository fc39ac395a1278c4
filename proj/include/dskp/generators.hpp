#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "dskp/instance.hpp"

namespace dskp {

// mt19937_64 with hand-rolled bounded draws: std::uniform_int_distribution is
// implementation-defined, and generated files must be byte-identical for a
// fixed seed everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    bool bernoulli(double p);

private:
    std::mt19937_64 eng_;
};

Graph star_graph(int n);  // vertex 0 is the center
Graph path_graph(int n);
Graph random_tree(Rng& rng, int n);
Graph gnp_graph(Rng& rng, int n, double p);
Graph split_graph(Rng& rng, int n, double p);  // clique + independent set
Graph random_connected_graph(Rng& rng, int n, double p);

struct GenParams {
    std::string family;  // star | path | random-tree | gnp | split | figure1
    int n = 0;
    double p = 0.3;
    std::int64_t wmax = 8;
    std::int64_t amax = 8;
    double zero_frac = 0.0;  // probability of zeroing a vertex weight
    std::uint64_t seed = 1;
    std::optional<std::int64_t> s;
    std::optional<std::int64_t> d;
};

// Deterministic for fixed params. Weights/profits are uniform in [1, wmax] /
// [1, amax]; when absent, s defaults to total_weight/2 and d to
// total_profit/2.
DskpInstance generate_instance(const GenParams& params);

// The worked star micro-instance: six vertices, center w = alpha = 5, leaves
// w = alpha = 1, s = d = 4.
DskpInstance figure1_instance();

// Random weights/profits in [1, wmax] / [1, amax] over an existing graph.
DskpInstance random_instance(Rng& rng, Graph g, std::int64_t wmax, std::int64_t amax,
                             std::int64_t s, std::int64_t d);

}  // namespace dskp
