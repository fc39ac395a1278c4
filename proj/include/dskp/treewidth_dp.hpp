#pragma once

#include <cstdint>
#include <vector>

#include "dskp/decomposition.hpp"
#include "dskp/instance.hpp"
#include "dskp/oracle.hpp"
#include "dskp/pareto.hpp"

namespace dskp {

// Bag-vertex state in a partial solution: BLACK is selected, WHITE is
// unselected with a domination promise, GRAY is unselected with no promise
// yet. Encoded base-3 in bag order (WHITE=0, BLACK=1, GRAY=2).
enum class Color : int { White = 0, Black = 1, Gray = 2 };

struct TwNodeStats {
    NodeKind kind;
    int bag_size = 0;
    std::uint64_t colorings = 0;     // colorings enumerated at this node
    std::uint64_t join_triples = 0;  // (c, c', c'') combinations at join nodes
};

struct TwDpStats {
    std::vector<TwNodeStats> nodes;
    std::uint64_t pair_ops = 0;
};

struct TwDpOptions {
    WitnessMode witnesses = WitnessMode::Auto;
};

// Exact DSKP Pareto frontier over a nice tree decomposition. D[i][c] is the
// Pareto set of partial solutions P within the subgraph seen below node i
// with P ∩ bag = BLACK(c), every forgotten vertex dominated, every WHITE bag
// vertex dominated, and GRAY bag vertices unconstrained.
ParetoSet tw_dp_pareto(const DskpInstance& inst, const NiceTreeDecomposition& ntd,
                       const TwDpOptions& opts = {}, TwDpStats* stats = nullptr);

// Per-node tables, indexed like the internal DP (node -> coloring -> set).
// Test hook for white-box checks of the table semantics; only sensible at
// small scale.
std::vector<std::vector<ParetoSet>> tw_dp_tables(const DskpInstance& inst,
                                                 const NiceTreeDecomposition& ntd,
                                                 const TwDpOptions& opts = {});

}  // namespace dskp
