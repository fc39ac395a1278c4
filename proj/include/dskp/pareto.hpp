#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dskp/bitset.hpp"

namespace dskp {

// One weight-profit point, optionally carrying the vertex set that realizes it.
struct WpPair {
    std::int64_t weight = 0;
    std::int64_t profit = 0;
    std::optional<Bitset> witness;
};

// Set of mutually undominated weight-profit pairs. A pair q dominates r iff
// q.weight <= r.weight and q.profit >= r.profit with at least one strict;
// equal pairs are duplicates and removed. The antichain is kept sorted by
// strictly increasing weight, which forces strictly increasing profit too.
class ParetoSet {
public:
    ParetoSet() = default;

    static ParetoSet singleton(WpPair p) {
        ParetoSet s;
        s.pairs_.push_back(std::move(p));
        return s;
    }

    const std::vector<WpPair>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

    // Inserts p, pruning dominated pairs. On an exact (weight, profit) tie
    // the already-stored pair wins.
    void insert(WpPair p);

    // Max profit among pairs with weight <= cap, absent if none.
    std::optional<std::int64_t> best_profit(std::int64_t cap) const;

    // The pair attaining best_profit, or nullptr.
    const WpPair* best_pair(std::int64_t cap) const;

    // Equality on (weight, profit) sequences; witnesses are ignored.
    bool operator==(const ParetoSet& o) const;
    bool operator!=(const ParetoSet& o) const { return !(*this == o); }

    // True iff sorted strictly increasing in both coordinates.
    bool check_antichain() const;

private:
    std::vector<WpPair> pairs_;
    friend ParetoSet merge(const ParetoSet&, const ParetoSet&);
    friend ParetoSet cross_sum(const ParetoSet&, const ParetoSet&, std::int64_t, std::uint64_t*);
    friend ParetoSet shifted_cross_sum(const ParetoSet&, const ParetoSet&, std::int64_t,
                                       std::int64_t, std::int64_t, std::uint64_t*);
    static ParetoSet prune(std::vector<WpPair> candidates);
};

// Antichain of a ∪ b.
ParetoSet merge(const ParetoSet& a, const ParetoSet& b);

// Antichain of pairwise sums with combined weight <= cap. Witnesses are
// unioned when both operands carry one. `ops`, when given, accumulates the
// number of candidate pairs examined (for complexity instrumentation).
ParetoSet cross_sum(const ParetoSet& a, const ParetoSet& b, std::int64_t cap,
                    std::uint64_t* ops = nullptr);

// Pairwise sums shifted by (-dw, -dp), kept when shifted weight <= cap.
// Used by the join rule of the treewidth DP, where the shared bag portion
// would otherwise be counted twice.
ParetoSet shifted_cross_sum(const ParetoSet& a, const ParetoSet& b, std::int64_t dw,
                            std::int64_t dp, std::int64_t cap, std::uint64_t* ops = nullptr);

}  // namespace dskp
