#include "dskp/tree_dp.hpp"

#include <string>
#include <utility>
#include <vector>

#include "dskp/error.hpp"

namespace dskp {

namespace {

struct VertexState {
    ParetoSet s_in;
    ParetoSet s_dom;
    ParetoSet s_free;
};

}  // namespace

ParetoSet tree_dp_pareto(const DskpInstance& inst, int root, const TreeDpOptions& opts,
                         TreeDpStats* stats) {
    inst.validate();
    if (inst.variant != Variant::Plain) throw Error("tree-dp: only the plain variant is supported");
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    if (!g.is_tree()) throw Error("tree-dp: input graph is not a tree");
    if (root < 0 || root >= n) throw Error("tree-dp: root out of range");
    const std::int64_t cap = inst.capacity;
    const bool track = resolve_witnesses(opts.witnesses, n);
    std::uint64_t* ops = stats ? &stats->pair_ops : nullptr;

    auto init_state = [&](int u) {
        VertexState st;
        if (inst.weights[u] <= cap) {
            WpPair self{inst.weights[u], inst.profits[u], std::nullopt};
            if (track) {
                Bitset w(n);
                w.set(u);
                self.witness = std::move(w);
            }
            st.s_in = ParetoSet::singleton(std::move(self));
        }
        WpPair zero{0, 0, std::nullopt};
        if (track) zero.witness = Bitset(n);
        st.s_free = ParetoSet::singleton(std::move(zero));
        return st;
    };

    // Explicit post-order: long paths must not blow the call stack. A child's
    // finished triple is folded into its parent immediately and freed.
    std::vector<VertexState> state(n);
    std::vector<int> parent(n, -2);
    std::vector<std::pair<int, bool>> stack;  // (vertex, expanded)
    stack.emplace_back(root, false);
    parent[root] = -1;
    while (!stack.empty()) {
        auto [u, expanded] = stack.back();
        stack.pop_back();
        if (!expanded) {
            state[u] = init_state(u);
            stack.emplace_back(u, true);
            for (int v : g.neighbors(u)) {
                if (v == parent[u]) continue;
                parent[v] = u;
                stack.emplace_back(v, false);
            }
        } else if (u != root) {
            const int p = parent[u];
            VertexState child = std::move(state[u]);
            VertexState& up = state[p];
            ParetoSet any = merge(child.s_in, merge(child.s_dom, child.s_free));
            ParetoSet in_or_dom = merge(child.s_in, child.s_dom);
            up.s_in = cross_sum(up.s_in, any, cap, ops);
            ParetoSet new_dom = merge(cross_sum(up.s_dom, in_or_dom, cap, ops),
                                      cross_sum(up.s_free, child.s_in, cap, ops));
            up.s_free = cross_sum(up.s_free, child.s_dom, cap, ops);
            up.s_dom = std::move(new_dom);
        }
    }
    return merge(state[root].s_in, state[root].s_dom);
}

}  // namespace dskp
