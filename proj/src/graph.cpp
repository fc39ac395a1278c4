#include "dskp/graph.hpp"

#include <algorithm>
#include <string>

#include "dskp/error.hpp"

namespace dskp {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error("graph: negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("graph: vertex id out of range in edge " + std::to_string(u) + " " +
                        std::to_string(v));
        if (u == v) throw Error("graph: self-loop edge " + std::to_string(u) + " " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (int u = 0; u < n; ++u)
        for (int v : g.adj_[u])
            if (u < v) g.edges_.emplace_back(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Bitset Graph::closed_neighborhood(int u) const {
    Bitset b(vertex_count());
    b.set(u);
    for (int v : adj_[u]) b.set(v);
    return b;
}

bool Graph::is_connected() const {
    int n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

bool Graph::is_tree() const {
    return vertex_count() >= 1 && edge_count() == vertex_count() - 1 && is_connected();
}

std::optional<std::vector<int>> Graph::two_coloring() const {
    int n = vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u]) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

}  // namespace dskp
