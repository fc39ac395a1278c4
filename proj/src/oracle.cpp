#include "dskp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <vector>

#include "dskp/error.hpp"

namespace dskp {

bool resolve_witnesses(WitnessMode mode, int n) {
    switch (mode) {
        case WitnessMode::On: return true;
        case WitnessMode::Off: return false;
        case WitnessMode::Auto: return n <= 1024;
    }
    return false;
}

namespace {

// Walks all masks extending `prefix` (fixed high bits) over the `low` free
// low bits in Gray-code order, maintaining the subset weight/profit and
// per-vertex dominator counts incrementally. The callback sees the current
// subset, its popcount, weight, profit, the number of undominated vertices,
// and the dominator-count array.
template <typename Fn>
void gray_walk(const Graph& g, std::span<const std::int64_t> weights,
               std::span<const std::int64_t> profits, int low, std::uint64_t prefix, Fn&& cb) {
    const int n = g.vertex_count();
    std::uint64_t mask = 0;
    std::vector<int> cnt(n, 0);  // cnt[u] = |N[u] ∩ S|
    int uncovered = n;
    int popcount = 0;
    std::int64_t weight = 0, profit = 0;
    auto flip = [&](int v) {
        if (mask & (std::uint64_t{1} << v)) {
            mask &= ~(std::uint64_t{1} << v);
            --popcount;
            if (!weights.empty()) {
                weight -= weights[v];
                profit -= profits[v];
            }
            if (--cnt[v] == 0) ++uncovered;
            for (int u : g.neighbors(v))
                if (--cnt[u] == 0) ++uncovered;
        } else {
            mask |= std::uint64_t{1} << v;
            ++popcount;
            if (!weights.empty()) {
                weight += weights[v];
                profit += profits[v];
            }
            if (cnt[v]++ == 0) --uncovered;
            for (int u : g.neighbors(v))
                if (cnt[u]++ == 0) --uncovered;
        }
    };
    for (int v = 0; v < n; ++v)
        if (prefix & (std::uint64_t{1} << v)) flip(v);
    cb(mask, popcount, weight, profit, uncovered, cnt);
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t t = 1; t < steps; ++t) {
        flip(std::countr_zero(t));
        cb(mask, popcount, weight, profit, uncovered, cnt);
    }
}

// Every selected vertex must privately dominate someone: some u in N[v] with
// no other dominator in the set. Given that the set dominates, this is
// equivalent to no single-vertex removal leaving a dominating set.
bool has_private_neighbors(const Graph& g, std::uint64_t mask, const std::vector<int>& cnt) {
    std::uint64_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        bool priv = cnt[v] == 1;
        if (!priv)
            for (int u : g.neighbors(v))
                if (cnt[u] == 1) {
                    priv = true;
                    break;
                }
        if (!priv) return false;
    }
    return true;
}

}  // namespace

ParetoSet oracle_pareto(const DskpInstance& inst, const OracleOptions& opts) {
    inst.validate();
    const int n = inst.vertex_count();
    if (n > opts.max_n)
        throw Error("oracle: instance too large (n=" + std::to_string(n) + " > cap " +
                    std::to_string(opts.max_n) + ")");
    const bool track = resolve_witnesses(opts.witnesses, n);

    auto feasible = [&](std::uint64_t mask, int pc, int uncovered, const std::vector<int>& cnt) {
        if (uncovered != 0) return false;
        switch (inst.variant) {
            case Variant::Plain: return true;
            case Variant::ExactK: return pc == inst.k;
            case Variant::Minimal: return has_private_neighbors(inst.graph, mask, cnt);
        }
        return false;
    };

    int jobs = std::max(1, opts.jobs);
    int high = 0;
    while ((1 << high) < jobs && high < n) ++high;
    const int low = n - high;
    const int parts = 1 << high;

    std::vector<ParetoSet> results(parts);
    auto run_part = [&](int part) {
        std::uint64_t prefix = static_cast<std::uint64_t>(part) << low;
        ParetoSet local;
        gray_walk(inst.graph, inst.weights, inst.profits, low, prefix,
                  [&](std::uint64_t mask, int pc, std::int64_t w, std::int64_t p, int uncovered,
                      const std::vector<int>& cnt) {
                      if (w > inst.capacity) return;
                      if (!feasible(mask, pc, uncovered, cnt)) return;
                      WpPair pair{w, p, std::nullopt};
                      if (track) pair.witness = Bitset::from_mask(mask, n);
                      local.insert(std::move(pair));
                  });
        results[part] = std::move(local);
    };

    if (parts == 1) {
        run_part(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(parts);
        for (int part = 0; part < parts; ++part) threads.emplace_back(run_part, part);
        for (auto& t : threads) t.join();
    }
    ParetoSet out;
    for (auto& r : results) out = merge(out, r);
    return out;
}

Decision oracle_decide(const DskpInstance& inst, const OracleOptions& opts) {
    ParetoSet frontier = oracle_pareto(inst, opts);
    const WpPair* best = frontier.best_pair(inst.capacity);
    Decision d;
    if (best && best->profit >= inst.target) {
        d.yes = true;
        d.witness = best->witness;
    }
    return d;
}

int oracle_min_dominating_set(const Graph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n) throw Error("oracle: instance too large (n=" + std::to_string(n) + ")");
    int best = n;  // the full vertex set always dominates
    gray_walk(g, {}, {}, n, 0,
              [&](std::uint64_t, int pc, std::int64_t, std::int64_t, int uncovered,
                  const std::vector<int>&) {
                  if (uncovered == 0 && pc < best) best = pc;
              });
    return best;
}

int oracle_max_minimal_dominating_set(const Graph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n) throw Error("oracle: instance too large (n=" + std::to_string(n) + ")");
    int best = -1;
    gray_walk(g, {}, {}, n, 0,
              [&](std::uint64_t mask, int pc, std::int64_t, std::int64_t, int uncovered,
                  const std::vector<int>& cnt) {
                  if (uncovered == 0 && pc > best && has_private_neighbors(g, mask, cnt))
                      best = pc;
              });
    return best;
}

ParetoSet knapsack_01(std::span<const std::int64_t> weights,
                      std::span<const std::int64_t> profits, std::int64_t cap) {
    if (cap < 0) return {};
    std::vector<std::int64_t> best(static_cast<std::size_t>(cap) + 1, -1);
    best[0] = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const std::int64_t w = weights[i], p = profits[i];
        if (w > cap) continue;
        for (std::int64_t j = cap; j >= w; --j)
            if (best[j - w] >= 0 && best[j - w] + p > best[j]) best[j] = best[j - w] + p;
    }
    ParetoSet out;
    for (std::int64_t j = 0; j <= cap; ++j)
        if (best[j] >= 0) out.insert(WpPair{j, best[j], std::nullopt});
    return out;
}

bool is_vertex_cover(const Graph& g, const Bitset& set) {
    for (auto [u, v] : g.edges())
        if (!set.test(u) && !set.test(v)) return false;
    return true;
}

Bitset min_vertex_cover(const Graph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n) throw Error("oracle: instance too large (n=" + std::to_string(n) + ")");
    if (g.edge_count() == 0) return Bitset(n);
    // Subsets in increasing cardinality, lexicographic within a size, so the
    // returned cover is deterministic.
    for (int k = 1; k <= n; ++k) {
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            Bitset cand = Bitset::from_mask(mask, n);
            if (is_vertex_cover(g, cand)) return cand;
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return Bitset::full(n);
}

}  // namespace dskp
