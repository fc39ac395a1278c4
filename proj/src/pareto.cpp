#include "dskp/pareto.hpp"

#include <algorithm>

namespace dskp {

void ParetoSet::insert(WpPair p) {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p.weight,
                               [](const WpPair& q, std::int64_t w) { return q.weight < w; });
    std::size_t idx = static_cast<std::size_t>(it - pairs_.begin());
    // A predecessor has strictly smaller weight; it dominates p when its
    // profit is at least p's.
    if (idx > 0 && pairs_[idx - 1].profit >= p.profit) return;
    if (idx < pairs_.size() && pairs_[idx].weight == p.weight && pairs_[idx].profit >= p.profit)
        return;
    std::size_t last = idx;
    while (last < pairs_.size() && pairs_[last].profit <= p.profit) ++last;
    if (last == idx) {
        pairs_.insert(pairs_.begin() + idx, std::move(p));
    } else {
        pairs_[idx] = std::move(p);
        pairs_.erase(pairs_.begin() + idx + 1, pairs_.begin() + last);
    }
}

std::optional<std::int64_t> ParetoSet::best_profit(std::int64_t cap) const {
    const WpPair* p = best_pair(cap);
    if (!p) return std::nullopt;
    return p->profit;
}

const WpPair* ParetoSet::best_pair(std::int64_t cap) const {
    auto it = std::upper_bound(pairs_.begin(), pairs_.end(), cap,
                               [](std::int64_t w, const WpPair& q) { return w < q.weight; });
    if (it == pairs_.begin()) return nullptr;
    return &*(it - 1);  // profits increase with weight along the antichain
}

bool ParetoSet::operator==(const ParetoSet& o) const {
    if (pairs_.size() != o.pairs_.size()) return false;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i].weight != o.pairs_[i].weight || pairs_[i].profit != o.pairs_[i].profit)
            return false;
    return true;
}

bool ParetoSet::check_antichain() const {
    for (std::size_t i = 1; i < pairs_.size(); ++i)
        if (pairs_[i].weight <= pairs_[i - 1].weight || pairs_[i].profit <= pairs_[i - 1].profit)
            return false;
    return true;
}

ParetoSet ParetoSet::prune(std::vector<WpPair> candidates) {
    // Sort by (weight asc, profit desc); stable so that on exact ties the
    // earlier candidate keeps its witness.
    std::stable_sort(candidates.begin(), candidates.end(), [](const WpPair& a, const WpPair& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.profit > b.profit;
    });
    ParetoSet out;
    std::int64_t best = -1;
    bool have = false;
    for (auto& c : candidates) {
        if (!have || c.profit > best) {
            best = c.profit;
            have = true;
            out.pairs_.push_back(std::move(c));
        }
    }
    return out;
}

ParetoSet merge(const ParetoSet& a, const ParetoSet& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<WpPair> cand;
    cand.reserve(a.size() + b.size());
    cand.insert(cand.end(), a.pairs_.begin(), a.pairs_.end());
    cand.insert(cand.end(), b.pairs_.begin(), b.pairs_.end());
    return ParetoSet::prune(std::move(cand));
}

namespace {

WpPair sum_pairs(const WpPair& x, const WpPair& y, std::int64_t dw, std::int64_t dp) {
    WpPair s;
    s.weight = x.weight + y.weight - dw;
    s.profit = x.profit + y.profit - dp;
    if (x.witness && y.witness) s.witness = *x.witness | *y.witness;
    return s;
}

}  // namespace

ParetoSet shifted_cross_sum(const ParetoSet& a, const ParetoSet& b, std::int64_t dw,
                            std::int64_t dp, std::int64_t cap, std::uint64_t* ops) {
    std::vector<WpPair> cand;
    cand.reserve(a.size() * b.size());
    for (const WpPair& x : a.pairs()) {
        for (const WpPair& y : b.pairs()) {
            if (ops) ++*ops;
            if (x.weight + y.weight - dw > cap) break;  // b sorted by weight
            cand.push_back(sum_pairs(x, y, dw, dp));
        }
    }
    return ParetoSet::prune(std::move(cand));
}

ParetoSet cross_sum(const ParetoSet& a, const ParetoSet& b, std::int64_t cap, std::uint64_t* ops) {
    return shifted_cross_sum(a, b, 0, 0, cap, ops);
}

}  // namespace dskp
