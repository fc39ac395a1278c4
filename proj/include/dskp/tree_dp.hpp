#pragma once

#include <cstdint>

#include "dskp/instance.hpp"
#include "dskp/oracle.hpp"
#include "dskp/pareto.hpp"

namespace dskp {

struct TreeDpOptions {
    WitnessMode witnesses = WitnessMode::Auto;
};

struct TreeDpStats {
    std::uint64_t pair_ops = 0;  // candidate pairs examined across all folds
};

// Exact DSKP Pareto frontier for trees in O(n * min{s, alpha(V)}^2).
//
// Bottom-up over the tree rooted at `root`, each vertex u carries three
// Pareto sets classifying partial solutions within u's subtree:
//   s_in:   sets containing u; the whole subtree is dominated.
//   s_dom:  sets excluding u; the whole subtree, u included, is dominated.
//   s_free: sets excluding u; everything but u is dominated, u is not yet
//           (only u's parent can still fix that).
//
// Folding child v into u:
//   s_in   x= merge(in, dom, free of v)   -- u dominates v either way
//   s_dom  = dom x merge(in_v, dom_v)  ∪  free x in_v
//   s_free x= dom_v                       -- a free child would stay undominated
//
// The answer at the root is merge(s_in, s_dom); s_free roots are not
// dominating sets. Capacity filtering happens at every fold.
ParetoSet tree_dp_pareto(const DskpInstance& inst, int root, const TreeDpOptions& opts = {},
                         TreeDpStats* stats = nullptr);

}  // namespace dskp
