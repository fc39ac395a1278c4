#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dskp/bitset.hpp"

namespace dskp {

// Undirected simple graph on dense 0-based vertex ids. Adjacency lists are
// kept sorted, deduplicated and symmetric.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Throws on self-loops or out-of-range ids;
    // duplicate edges are collapsed.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    bool has_edge(int u, int v) const;

    // Canonical edge list: u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    Bitset closed_neighborhood(int u) const;

    bool is_connected() const;
    bool is_tree() const;

    // Proper 2-coloring if the graph is bipartite (color per vertex, 0/1).
    std::optional<std::vector<int>> two_coloring() const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace dskp
