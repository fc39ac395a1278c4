#include "dskp/vc_dp.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "dskp/error.hpp"

namespace dskp {

ParetoSet vck_pareto(const DskpInstance& inst, const Bitset& cover, const VcDpOptions& opts,
                     VcDpStats* stats) {
    inst.validate();
    if (inst.variant != Variant::Plain) throw Error("vck: only the plain variant is supported");
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    if (cover.size() != n) throw Error("vck: cover bit vector size mismatch");
    if (!is_vertex_cover(g, cover)) throw Error("vck: given set is not a vertex cover");
    const std::vector<int> cover_vertices = cover.to_vector();
    const int cs = static_cast<int>(cover_vertices.size());
    if (cs > opts.max_cover)
        throw Error("vck: cover too large (" + std::to_string(cs) + " > cap " +
                    std::to_string(opts.max_cover) + ")");
    const bool track = resolve_witnesses(opts.witnesses, n);
    const std::int64_t cap = inst.capacity;
    std::uint64_t* ops = stats ? &stats->pair_ops : nullptr;

    std::vector<int> independent;
    std::vector<int> cover_index(n, -1), ind_index(n, -1);
    for (int i = 0; i < cs; ++i) cover_index[cover_vertices[i]] = i;
    for (int v = 0; v < n; ++v)
        if (!cover.test(v)) {
            ind_index[v] = static_cast<int>(independent.size());
            independent.push_back(v);
        }

    // Every neighbor of an independent vertex is a cover vertex.
    std::vector<std::uint64_t> nbr_cover_mask(independent.size(), 0);
    for (std::size_t i = 0; i < independent.size(); ++i)
        for (int u : g.neighbors(independent[i]))
            nbr_cover_mask[i] |= std::uint64_t{1} << cover_index[u];

    ParetoSet answer;
    const std::uint64_t subsets = std::uint64_t{1} << cs;
    for (std::uint64_t sc = 0; sc < subsets; ++sc) {
        if (stats) ++stats->cover_subsets;

        std::int64_t base_w = 0, base_p = 0;
        Bitset base_set(track ? n : 0);
        auto pick = [&](int v) {
            base_w += inst.weights[v];
            base_p += inst.profits[v];
            if (track) base_set.set(v);
        };
        for (int i = 0; i < cs; ++i)
            if (sc & (std::uint64_t{1} << i)) pick(cover_vertices[i]);

        // Forced: independent vertices with no selected neighbor. Optional
        // picks are the rest; they are dominated by S_c either way.
        std::vector<int> optionals;
        for (std::size_t i = 0; i < independent.size(); ++i) {
            if ((nbr_cover_mask[i] & sc) == 0)
                pick(independent[i]);
            else
                optionals.push_back(independent[i]);
        }
        if (base_w > cap) continue;  // weights are non-negative; no completion fits

        // Unselected cover vertices that neither the selection nor the forced
        // set reaches; optional picks must cover them.
        std::vector<int> needy;  // cover indices
        for (int i = 0; i < cs; ++i) {
            if (sc & (std::uint64_t{1} << i)) continue;
            const int u = cover_vertices[i];
            bool dominated = false;
            for (int v : g.neighbors(u)) {
                const bool in_base = cover.test(v)
                                         ? (sc >> cover_index[v]) & 1
                                         : (nbr_cover_mask[ind_index[v]] & sc) == 0;
                if (in_base) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) needy.push_back(i);
        }
        const std::uint64_t full = (std::uint64_t{1} << needy.size()) - 1;

        // Coverage bits of each optional pick, restricted to needy vertices.
        std::vector<std::uint64_t> needy_bit(cs, 0);
        for (std::size_t r = 0; r < needy.size(); ++r) needy_bit[needy[r]] = std::uint64_t{1} << r;
        std::vector<std::pair<std::uint64_t, int>> picks;  // (coverage, vertex)
        picks.reserve(optionals.size());
        for (int v : optionals) {
            std::uint64_t m = 0;
            for (int u : g.neighbors(v)) m |= needy_bit[cover_index[u]];
            picks.emplace_back(m, v);
        }
        // Fold widest coverage first; the result is order-independent.
        std::stable_sort(picks.begin(), picks.end(), [](const auto& a, const auto& b) {
            return std::popcount(a.first) > std::popcount(b.first);
        });

        WpPair base{base_w, base_p, std::nullopt};
        if (track) base.witness = std::move(base_set);
        std::map<std::uint64_t, ParetoSet> states;
        states[full] = ParetoSet::singleton(std::move(base));
        for (auto [cov, v] : picks) {
            WpPair item{inst.weights[v], inst.profits[v], std::nullopt};
            if (track) {
                Bitset wit(n);
                wit.set(v);
                item.witness = std::move(wit);
            }
            const ParetoSet taken_item = ParetoSet::singleton(std::move(item));
            std::map<std::uint64_t, ParetoSet> next = states;  // skip case
            for (const auto& [mask, pset] : states) {
                const std::uint64_t nm = mask & ~cov;
                ParetoSet taken = cross_sum(pset, taken_item, cap, ops);
                auto it = next.find(nm);
                if (it == next.end())
                    next.emplace(nm, std::move(taken));
                else
                    it->second = merge(it->second, taken);
            }
            states = std::move(next);
        }
        auto done = states.find(0);
        if (done != states.end()) answer = merge(answer, done->second);
    }
    return answer;
}

}  // namespace dskp
