#include "dskp/generators.hpp"

#include <cmath>

#include "dskp/error.hpp"

namespace dskp {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw Error("rng: empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t reject_above = ~std::uint64_t{0} - (~std::uint64_t{0} % range + 1) % range;
    std::uint64_t r;
    do {
        r = next();
    } while (r > reject_above);
    return lo + static_cast<std::int64_t>(r % range);
}

bool Rng::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    const auto threshold =
        static_cast<std::uint64_t>(p * 18446744073709551616.0 /* 2^64 */);
    return next() < threshold;
}

Graph star_graph(int n) {
    if (n < 1) throw Error("star: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw Error("path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph random_tree(Rng& rng, int n) {
    if (n < 1) throw Error("random-tree: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(rng.uniform(0, i - 1)), i);
    return Graph::from_edges(n, edges);
}

Graph gnp_graph(Rng& rng, int n, double p) {
    if (n < 0) throw Error("gnp: n must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph split_graph(Rng& rng, int n, double p) {
    if (n < 1) throw Error("split: n must be >= 1");
    const int c = (n + 1) / 2;  // vertices [0, c) form the clique
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < c; ++i)
        for (int j = c; j < n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(Rng& rng, int n, double p) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = gnp_graph(rng, n, p);
        if (g.is_connected()) return g;
    }
    // Overlay a random spanning tree; keeps the draw deterministic.
    Graph g = gnp_graph(rng, n, p);
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(rng.uniform(0, i - 1)), i);
    return Graph::from_edges(n, edges);
}

DskpInstance random_instance(Rng& rng, Graph g, std::int64_t wmax, std::int64_t amax,
                             std::int64_t s, std::int64_t d) {
    DskpInstance inst;
    const int n = g.vertex_count();
    inst.graph = std::move(g);
    inst.weights.reserve(n);
    inst.profits.reserve(n);
    for (int v = 0; v < n; ++v) {
        inst.weights.push_back(rng.uniform(1, wmax));
        inst.profits.push_back(rng.uniform(1, amax));
    }
    inst.capacity = s;
    inst.target = d;
    inst.validate();
    return inst;
}

DskpInstance figure1_instance() {
    DskpInstance inst;
    inst.graph = star_graph(6);
    inst.weights = {5, 1, 1, 1, 1, 1};
    inst.profits = {5, 1, 1, 1, 1, 1};
    inst.capacity = 4;
    inst.target = 4;
    return inst;
}

DskpInstance generate_instance(const GenParams& params) {
    if (params.family == "figure1") {
        DskpInstance inst = figure1_instance();
        if (params.s) inst.capacity = *params.s;
        if (params.d) inst.target = *params.d;
        return inst;
    }
    if (params.wmax < 1 || params.amax < 1) throw Error("gen: wmax and amax must be >= 1");
    if (params.p < 0.0 || params.p > 1.0) throw Error("gen: p must lie in [0, 1]");
    if (params.zero_frac < 0.0 || params.zero_frac > 1.0)
        throw Error("gen: zero-frac must lie in [0, 1]");
    Rng rng(params.seed);
    Graph g;
    if (params.family == "star")
        g = star_graph(params.n);
    else if (params.family == "path")
        g = path_graph(params.n);
    else if (params.family == "random-tree")
        g = random_tree(rng, params.n);
    else if (params.family == "gnp")
        g = gnp_graph(rng, params.n, params.p);
    else if (params.family == "split")
        g = split_graph(rng, params.n, params.p);
    else
        throw Error("gen: unknown family '" + params.family + "'");

    DskpInstance inst = random_instance(rng, std::move(g), params.wmax, params.amax, 0, 0);
    if (params.zero_frac > 0.0)
        for (auto& w : inst.weights)
            if (rng.bernoulli(params.zero_frac)) w = 0;
    inst.capacity = params.s ? *params.s : inst.total_weight() / 2;
    inst.target = params.d ? *params.d : inst.total_profit() / 2;
    inst.validate();
    return inst;
}

}  // namespace dskp
