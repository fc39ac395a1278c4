#pragma once

#include <cstdint>

#include "dskp/instance.hpp"
#include "dskp/oracle.hpp"
#include "dskp/pareto.hpp"

namespace dskp {

struct VcDpOptions {
    WitnessMode witnesses = WitnessMode::Auto;
    int max_cover = 30;  // enumeration cap on |cover|
};

struct VcDpStats {
    std::uint64_t cover_subsets = 0;  // always 2^|cover|
    std::uint64_t pair_ops = 0;
};

// Exact DSKP Pareto frontier given a vertex cover S of the graph. For every
// S_c ⊆ S taken as the selected cover vertices:
//   - independent vertices with no neighbor in S_c are forced into the set
//     (all their neighbors lie in S, so nothing else can dominate them);
//   - cover vertices outside S_c not dominated by S_c or the forced set must
//     be covered by optional independent picks, tracked as an
//     uncovered-subset DP whose states carry Pareto sets;
//   - optional picks also contribute plain weight/profit.
// Any valid cover yields the same frontier.
ParetoSet vck_pareto(const DskpInstance& inst, const Bitset& cover, const VcDpOptions& opts = {},
                     VcDpStats* stats = nullptr);

}  // namespace dskp
