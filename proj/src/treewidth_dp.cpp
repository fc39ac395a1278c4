#include "dskp/treewidth_dp.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "dskp/error.hpp"

namespace dskp {

namespace {

constexpr int kMaxBag = 20;  // 3^20 colorings is already past desk scale

std::uint64_t pow3(int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

int digit(std::uint64_t idx, int pos) { return static_cast<int>(idx / pow3(pos) % 3); }

struct Solver {
    const DskpInstance& inst;
    const NiceTreeDecomposition& ntd;
    bool track;
    std::int64_t cap;
    TwDpStats* stats;
    bool keep_tables;
    std::vector<std::vector<ParetoSet>> tables;

    Solver(const DskpInstance& i, const NiceTreeDecomposition& d, bool witnesses,
           TwDpStats* st, bool keep)
        : inst(i), ntd(d), track(witnesses), cap(i.capacity), stats(st), keep_tables(keep) {
        tables.resize(ntd.nodes.size());
    }

    std::uint64_t* ops() { return stats ? &stats->pair_ops : nullptr; }

    void note(NodeKind kind, int bag_size, std::uint64_t colorings, std::uint64_t triples) {
        if (stats) stats->nodes.push_back({kind, bag_size, colorings, triples});
    }

    // Position of v in the sorted bag.
    static int bag_pos(const std::vector<int>& bag, int v) {
        return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    }

    std::vector<ParetoSet> leaf_case(const NiceNode& node) {
        const auto& bag = node.bag;
        const int b = static_cast<int>(bag.size());
        const std::uint64_t total = pow3(b);
        std::vector<ParetoSet> table(total);
        for (std::uint64_t c = 0; c < total; ++c) {
            std::int64_t w = 0, p = 0;
            bool valid = true;
            for (int i = 0; i < b && valid; ++i) {
                const Color col = static_cast<Color>(digit(c, i));
                if (col == Color::Black) {
                    w += inst.weights[bag[i]];
                    p += inst.profits[bag[i]];
                } else if (col == Color::White) {
                    // a WHITE vertex must already be dominated, i.e. have a
                    // BLACK neighbor inside the bag
                    bool dominated = false;
                    for (int j = 0; j < b; ++j)
                        if (static_cast<Color>(digit(c, j)) == Color::Black &&
                            inst.graph.has_edge(bag[i], bag[j])) {
                            dominated = true;
                            break;
                        }
                    valid = dominated;
                }
            }
            if (!valid || w > cap) continue;
            WpPair pair{w, p, std::nullopt};
            if (track) {
                Bitset wit(inst.vertex_count());
                for (int i = 0; i < b; ++i)
                    if (static_cast<Color>(digit(c, i)) == Color::Black) wit.set(bag[i]);
                pair.witness = std::move(wit);
            }
            table[c] = ParetoSet::singleton(std::move(pair));
        }
        note(NodeKind::Leaf, b, total, 0);
        return table;
    }

    std::vector<ParetoSet> introduce_case(const NiceNode& node, std::vector<ParetoSet> child) {
        const auto& bag = node.bag;
        const int b = static_cast<int>(bag.size());
        const int px = bag_pos(bag, node.vertex);
        const std::uint64_t lowmod = pow3(px);
        const std::uint64_t total = pow3(b);
        // bag positions (in the child bag) of the introduced vertex's
        // neighbors; only they may be re-promised by a BLACK introduce
        std::vector<int> nbr_child_pos;
        const auto& cbag = ntd.nodes[node.child].bag;
        for (int i = 0; i < static_cast<int>(cbag.size()); ++i)
            if (inst.graph.has_edge(node.vertex, cbag[i])) nbr_child_pos.push_back(i);

        std::vector<ParetoSet> table(total);
        for (std::uint64_t c = 0; c < total; ++c) {
            const Color cx = static_cast<Color>(digit(c, px));
            const std::uint64_t cc = c % lowmod + c / (lowmod * 3) * lowmod;  // drop x's digit
            if (cx == Color::Gray) {
                table[c] = child[cc];
            } else if (cx == Color::White) {
                bool dominated = false;
                for (int i = 0; i < b; ++i)
                    if (static_cast<Color>(digit(c, i)) == Color::Black &&
                        inst.graph.has_edge(node.vertex, bag[i])) {
                        dominated = true;
                        break;
                    }
                if (dominated) table[c] = child[cc];
            } else {
                // BLACK introduce: x newly dominates its bag neighbors, so
                // their WHITE promises may come from x alone -- relax exactly
                // those child digits to GRAY, then pay for x.
                std::uint64_t relaxed = cc;
                for (int i : nbr_child_pos)
                    if (digit(cc, i) == static_cast<int>(Color::White))
                        relaxed += 2 * pow3(i);  // White(0) -> Gray(2)
                ParetoSet cell;
                for (const WpPair& q : child[relaxed].pairs()) {
                    if (ops()) ++*ops();
                    const std::int64_t w = q.weight + inst.weights[node.vertex];
                    if (w > cap) break;  // pairs sorted by weight
                    WpPair pair{w, q.profit + inst.profits[node.vertex], std::nullopt};
                    if (track && q.witness) {
                        Bitset wit = *q.witness;
                        wit.set(node.vertex);
                        pair.witness = std::move(wit);
                    }
                    cell.insert(std::move(pair));
                }
                table[c] = std::move(cell);
            }
        }
        note(NodeKind::Introduce, b, total, 0);
        return table;
    }

    std::vector<ParetoSet> forget_case(const NiceNode& node, std::vector<ParetoSet> child) {
        const auto& cbag = ntd.nodes[node.child].bag;
        const int px = bag_pos(cbag, node.vertex);
        const std::uint64_t lowmod = pow3(px);
        const std::uint64_t total = pow3(static_cast<int>(node.bag.size()));
        std::vector<ParetoSet> table(total);
        for (std::uint64_t c = 0; c < total; ++c) {
            // re-insert x's digit: a forgotten vertex must be BLACK or WHITE;
            // a forgotten GRAY vertex would stay undominated forever
            const std::uint64_t base = c % lowmod + c / lowmod * (lowmod * 3);
            table[c] = merge(child[base + pow3(px) * static_cast<int>(Color::Black)],
                             child[base + pow3(px) * static_cast<int>(Color::White)]);
        }
        note(NodeKind::Forget, static_cast<int>(node.bag.size()), total, 0);
        return table;
    }

    std::vector<ParetoSet> join_case(const NiceNode& node, std::vector<ParetoSet> left,
                                     std::vector<ParetoSet> right) {
        const auto& bag = node.bag;
        const int b = static_cast<int>(bag.size());
        const std::uint64_t total = pow3(b);
        std::uint64_t triples = 0;
        std::vector<ParetoSet> table(total);
        for (std::uint64_t c = 0; c < total; ++c) {
            std::int64_t black_w = 0, black_p = 0;
            std::vector<int> white_pos;
            for (int i = 0; i < b; ++i) {
                const Color col = static_cast<Color>(digit(c, i));
                if (col == Color::Black) {
                    black_w += inst.weights[bag[i]];
                    black_p += inst.profits[bag[i]];
                } else if (col == Color::White) {
                    white_pos.push_back(i);
                }
            }
            // Each WHITE vertex takes its promise from exactly one side; the
            // other side holds GRAY. BLACK and GRAY digits match on both
            // sides. The shared BLACK bag weight/profit is counted twice by
            // the cross sum and subtracted back.
            const int wcount = static_cast<int>(white_pos.size());
            ParetoSet cell;
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << wcount); ++sub) {
                std::uint64_t cl = c, cr = c;
                for (int t = 0; t < wcount; ++t) {
                    if (sub & (std::uint64_t{1} << t))
                        cr += 2 * pow3(white_pos[t]);  // right side gives up the promise
                    else
                        cl += 2 * pow3(white_pos[t]);
                }
                ++triples;
                cell = merge(cell, shifted_cross_sum(left[cl], right[cr], black_w, black_p, cap,
                                                     ops()));
            }
            table[c] = std::move(cell);
        }
        note(NodeKind::Join, b, total, triples);
        return table;
    }

    ParetoSet run() {
        std::vector<std::vector<ParetoSet>> store(ntd.nodes.size());
        for (int i : ntd.post_order()) {
            const NiceNode& node = ntd.nodes[i];
            switch (node.kind) {
                case NodeKind::Leaf: store[i] = leaf_case(node); break;
                case NodeKind::Introduce:
                    store[i] = introduce_case(node, std::move(store[node.child]));
                    break;
                case NodeKind::Forget:
                    store[i] = forget_case(node, std::move(store[node.child]));
                    break;
                case NodeKind::Join:
                    store[i] = join_case(node, std::move(store[node.child]),
                                         std::move(store[node.child2]));
                    break;
            }
            if (keep_tables) tables[i] = store[i];
        }
        // Answer: GRAY vertices are still unresolved, so only BLACK/WHITE
        // root colorings count. With the empty-bag root this is one cell.
        const NiceNode& root = ntd.nodes[ntd.root];
        const int b = static_cast<int>(root.bag.size());
        ParetoSet answer;
        for (std::uint64_t c = 0; c < pow3(b); ++c) {
            bool no_gray = true;
            for (int i = 0; i < b; ++i)
                if (static_cast<Color>(digit(c, i)) == Color::Gray) no_gray = false;
            if (no_gray) answer = merge(answer, store[ntd.root][c]);
        }
        return answer;
    }
};

}  // namespace

ParetoSet tw_dp_pareto(const DskpInstance& inst, const NiceTreeDecomposition& ntd,
                       const TwDpOptions& opts, TwDpStats* stats) {
    inst.validate();
    if (inst.variant != Variant::Plain) throw Error("tw-dp: only the plain variant is supported");
    try {
        ntd.validate(inst.graph);
    } catch (const Error& e) {
        throw Error(std::string("tw-dp: decomposition invalid for graph: ") + e.what());
    }
    if (ntd.width() + 1 > kMaxBag) throw Error("tw-dp: decomposition width too large");
    Solver solver(inst, ntd, resolve_witnesses(opts.witnesses, inst.vertex_count()), stats, false);
    return solver.run();
}

std::vector<std::vector<ParetoSet>> tw_dp_tables(const DskpInstance& inst,
                                                 const NiceTreeDecomposition& ntd,
                                                 const TwDpOptions& opts) {
    inst.validate();
    ntd.validate(inst.graph);
    Solver solver(inst, ntd, resolve_witnesses(opts.witnesses, inst.vertex_count()), nullptr, true);
    solver.run();
    return std::move(solver.tables);
}

}  // namespace dskp
