#include "dskp/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "dskp/error.hpp"

namespace dskp {

namespace {

bool bag_contains(const std::vector<int>& bag, int v) {
    return std::binary_search(bag.begin(), bag.end(), v);
}

std::vector<int> bag_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_tree_shape(int count, const std::vector<std::pair<int, int>>& edges,
                      const char* what) {
    if (count == 0) {
        if (!edges.empty()) throw Error(std::string(what) + ": edges without bags");
        return;
    }
    if (static_cast<int>(edges.size()) != count - 1)
        throw Error(std::string(what) + ": bag graph is not a tree (edge count)");
    std::vector<std::vector<int>> adj(count);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= count || b < 0 || b >= count || a == b)
            throw Error(std::string(what) + ": bad bag edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != count)
        throw Error(std::string(what) + ": bag graph is not a tree (disconnected)");
}

// The three decomposition properties over arbitrary bag trees; shared by the
// plain and nice validators.
void check_td_properties(const Graph& g, const std::vector<std::vector<int>>& bags,
                         const std::vector<std::pair<int, int>>& edges) {
    const int n = g.vertex_count();
    std::vector<char> covered(n, 0);
    for (const auto& bag : bags)
        for (int v : bag) {
            if (v < 0 || v >= n) throw Error("td: bag vertex out of range");
            covered[v] = 1;
        }
    for (int v = 0; v < n; ++v)
        if (!covered[v]) throw Error("td: vertex " + std::to_string(v) + " not covered by any bag");

    for (auto [u, v] : g.edges()) {
        bool inside = false;
        for (const auto& bag : bags)
            if (bag_contains(bag, u) && bag_contains(bag, v)) {
                inside = true;
                break;
            }
        if (!inside)
            throw Error("td: edge " + std::to_string(u) + " " + std::to_string(v) +
                        " not inside any bag");
    }

    // Connected-subtree property: the bags holding v must induce a connected
    // subgraph of the bag tree.
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        int start = -1, total = 0;
        for (std::size_t i = 0; i < bags.size(); ++i)
            if (bag_contains(bags[i], v)) {
                ++total;
                if (start < 0) start = static_cast<int>(i);
            }
        if (total <= 1) continue;
        std::vector<char> seen(bags.size(), 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j : adj[i])
                if (!seen[j] && bag_contains(bags[j], v)) {
                    seen[j] = 1;
                    ++reached;
                    stack.push_back(j);
                }
        }
        if (reached != total)
            throw Error("td: bags containing vertex " + std::to_string(v) +
                        " do not induce a connected subtree");
    }
}

}  // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

void TreeDecomposition::validate(const Graph& g) const {
    check_tree_shape(static_cast<int>(bags.size()), tree_edges, "td");
    for (const auto& bag : bags)
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw Error("td: bags must be sorted and duplicate-free");
    if (g.vertex_count() > 0 && bags.empty()) throw Error("td: no bags");
    check_td_properties(g, bags, tree_edges);
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

std::vector<int> NiceTreeDecomposition::post_order() const {
    std::vector<int> order;
    order.reserve(nodes.size());
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [i, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(i);
            continue;
        }
        stack.emplace_back(i, true);
        if (nodes[i].child >= 0) stack.emplace_back(nodes[i].child, false);
        if (nodes[i].child2 >= 0) stack.emplace_back(nodes[i].child2, false);
    }
    return order;
}

void NiceTreeDecomposition::validate(const Graph& g) const {
    if (nodes.empty() || root < 0 || root >= static_cast<int>(nodes.size()))
        throw Error("ntd: empty or missing root");
    std::vector<int> indeg(nodes.size(), 0);
    for (const auto& node : nodes) {
        if (node.child >= 0) ++indeg[node.child];
        if (node.child2 >= 0) ++indeg[node.child2];
    }
    if (indeg[root] != 0) throw Error("ntd: root has a parent");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (static_cast<int>(i) != root && indeg[i] != 1)
            throw Error("ntd: node " + std::to_string(i) + " is not reachable exactly once");

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const NiceNode& node = nodes[i];
        switch (node.kind) {
            case NodeKind::Leaf:
                if (node.child >= 0 || node.child2 >= 0) throw Error("ntd: leaf with children");
                if (!node.bag.empty()) throw Error("ntd: leaf bag not empty");
                break;
            case NodeKind::Introduce: {
                if (node.child < 0 || node.child2 >= 0) throw Error("ntd: introduce arity");
                const auto& cb = nodes[node.child].bag;
                if (!bag_contains(node.bag, node.vertex) || bag_contains(cb, node.vertex))
                    throw Error("ntd: introduce vertex mismatch");
                if (node.bag.size() != cb.size() + 1 || bag_minus(node.bag, cb) != std::vector<int>{node.vertex})
                    throw Error("ntd: introduce bag mismatch");
                break;
            }
            case NodeKind::Forget: {
                if (node.child < 0 || node.child2 >= 0) throw Error("ntd: forget arity");
                const auto& cb = nodes[node.child].bag;
                if (bag_contains(node.bag, node.vertex) || !bag_contains(cb, node.vertex))
                    throw Error("ntd: forget vertex mismatch");
                if (cb.size() != node.bag.size() + 1 || bag_minus(cb, node.bag) != std::vector<int>{node.vertex})
                    throw Error("ntd: forget bag mismatch");
                break;
            }
            case NodeKind::Join:
                if (node.child < 0 || node.child2 < 0) throw Error("ntd: join arity");
                if (nodes[node.child].bag != node.bag || nodes[node.child2].bag != node.bag)
                    throw Error("ntd: join bags differ");
                break;
        }
    }
    if (!nodes[root].bag.empty()) throw Error("ntd: root bag not empty");

    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> edges;
    bags.reserve(nodes.size());
    for (const auto& node : nodes) bags.push_back(node.bag);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].child >= 0) edges.emplace_back(static_cast<int>(i), nodes[i].child);
        if (nodes[i].child2 >= 0) edges.emplace_back(static_cast<int>(i), nodes[i].child2);
    }
    check_tree_shape(static_cast<int>(nodes.size()), edges, "ntd");
    check_td_properties(g, bags, edges);
}

TreeDecomposition parse_td(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    bool have_header = false;
    int declared_bags = 0, declared_width1 = 0, declared_n = 0;
    std::vector<bool> seen_bag;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "s") {
            if (have_header) throw Error("td parse: duplicate header");
            std::string td_tag;
            if (!(ss >> td_tag >> declared_bags >> declared_width1 >> declared_n) || td_tag != "td")
                throw Error("td parse: malformed header (expected 's td <bags> <width+1> <n>')");
            if (declared_bags < 0 || declared_width1 < 0 || declared_n < 0)
                throw Error("td parse: malformed header (negative value)");
            td.bags.assign(declared_bags, {});
            seen_bag.assign(declared_bags, false);
            have_header = true;
            continue;
        }
        if (!have_header) throw Error("td parse: missing 's td' header");
        if (tag == "b") {
            int id;
            if (!(ss >> id)) throw Error("td parse: malformed bag line '" + line + "'");
            if (id < 1 || id > declared_bags) throw Error("td parse: bag id out of range");
            if (seen_bag[id - 1]) throw Error("td parse: duplicate bag " + std::to_string(id));
            seen_bag[id - 1] = true;
            int v;
            while (ss >> v) {
                if (v < 1 || v > declared_n) throw Error("td parse: bag vertex out of range");
                td.bags[id - 1].push_back(v - 1);
            }
            auto& bag = td.bags[id - 1];
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            continue;
        }
        // remaining lines are tree edges between bag ids
        int a, b;
        std::istringstream es(line);
        if (!(es >> a >> b)) throw Error("td parse: malformed line '" + line + "'");
        std::string extra;
        if (es >> extra) throw Error("td parse: malformed edge line '" + line + "'");
        if (a < 1 || a > declared_bags || b < 1 || b > declared_bags)
            throw Error("td parse: tree edge bag id out of range");
        td.tree_edges.emplace_back(a - 1, b - 1);
    }
    if (!have_header) throw Error("td parse: missing 's td' header");
    for (int i = 0; i < declared_bags; ++i)
        if (!seen_bag[i]) throw Error("td parse: bag " + std::to_string(i + 1) + " missing");
    if (td.width() + 1 != declared_width1)
        throw Error("td parse: declared width+1 (" + std::to_string(declared_width1) +
                    ") does not match max bag size (" + std::to_string(td.width() + 1) + ")");
    check_tree_shape(declared_bags, td.tree_edges, "td parse");
    return td;
}

TreeDecomposition parse_td(const std::string& text) {
    std::istringstream ss(text);
    return parse_td(ss);
}

std::string write_td(const TreeDecomposition& td, int n_vertices) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n_vertices << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

TreeDecomposition heuristic_td(const Graph& g) {
    const int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u].insert(v);

    std::vector<char> eliminated(n, 0);
    std::vector<int> elim_index(n, -1);
    std::vector<std::vector<int>> elim_neighbors(n);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            if (best < 0 || adj[v].size() < adj[best].size()) best = v;
        }
        elim_index[best] = step;
        order.push_back(best);
        elim_neighbors[best].assign(adj[best].begin(), adj[best].end());
        for (int a : elim_neighbors[best])
            for (int b : elim_neighbors[best])
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (int a : elim_neighbors[best]) adj[a].erase(best);
        adj[best].clear();
        eliminated[best] = 1;
    }

    // Bag per eliminated vertex; the parent is the bag of its first-eliminated
    // neighbor, which is what makes the connected-subtree property hold.
    td.bags.assign(n, {});
    std::vector<int> node_of(n);
    for (int i = 0; i < n; ++i) node_of[order[i]] = i;
    for (int v = 0; v < n; ++v) {
        td.bags[node_of[v]] = elim_neighbors[v];
        td.bags[node_of[v]].push_back(v);
        std::sort(td.bags[node_of[v]].begin(), td.bags[node_of[v]].end());
    }
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        int parent_vertex = -1;
        for (int u : elim_neighbors[v])
            if (parent_vertex < 0 || elim_index[u] < elim_index[parent_vertex]) parent_vertex = u;
        if (parent_vertex >= 0) {
            td.tree_edges.emplace_back(i, node_of[parent_vertex]);
        } else if (i + 1 < n) {
            // isolated remainder: chain to the next bag to keep a single tree
            td.tree_edges.emplace_back(i, i + 1);
        }
    }
    return td;
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceNode node) {
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    }

    // Leaf + ascending introduces up to `bag`.
    int leaf_chain(const std::vector<int>& bag) {
        int cur = add({NodeKind::Leaf, {}, -1, -1, -1});
        std::vector<int> partial;
        for (int v : bag) {
            partial.push_back(v);
            cur = add({NodeKind::Introduce, partial, cur, -1, v});
        }
        return cur;
    }

    // Chain from node `below` (bag `from`) up to bag `to`: forgets first,
    // then introduces, both ascending.
    int adapt(int below, const std::vector<int>& from, const std::vector<int>& to) {
        int cur = below;
        std::vector<int> bag = from;
        for (int v : bag_minus(from, to)) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            cur = add({NodeKind::Forget, bag, cur, -1, v});
        }
        for (int v : bag_minus(to, from)) {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            cur = add({NodeKind::Introduce, bag, cur, -1, v});
        }
        return cur;
    }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
    NiceTreeDecomposition ntd;
    NiceBuilder builder;
    if (td.bags.empty()) {
        ntd.root = builder.add({NodeKind::Leaf, {}, -1, -1, -1});
        ntd.nodes = std::move(builder.nodes);
        return ntd;
    }

    const int count = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> adj(count);
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // Rooted at bag 0; children resolved with an explicit stack, each child's
    // top node adapted to the parent bag and combined with join nodes.
    const int troot = 0;
    std::vector<int> parent(count, -2);
    std::vector<int> top(count, -1);
    std::vector<std::pair<int, bool>> stack{{troot, false}};
    parent[troot] = -1;
    while (!stack.empty()) {
        auto [i, expanded] = stack.back();
        stack.pop_back();
        if (!expanded) {
            stack.emplace_back(i, true);
            for (int j : adj[i])
                if (j != parent[i]) {
                    parent[j] = i;
                    stack.emplace_back(j, false);
                }
        } else {
            std::vector<int> adapted;
            for (int j : adj[i])
                if (j != parent[i])
                    adapted.push_back(builder.adapt(top[j], td.bags[j], td.bags[i]));
            if (adapted.empty()) {
                top[i] = builder.leaf_chain(td.bags[i]);
            } else {
                int cur = adapted[0];
                for (std::size_t c = 1; c < adapted.size(); ++c)
                    cur = builder.add({NodeKind::Join, td.bags[i], cur, adapted[c], -1});
                top[i] = cur;
            }
        }
    }
    ntd.root = builder.adapt(top[troot], td.bags[troot], {});
    ntd.nodes = std::move(builder.nodes);
    return ntd;
}

}  // namespace dskp
