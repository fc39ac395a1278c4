#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dskp/instance.hpp"
#include "dskp/pareto.hpp"

namespace dskp {

enum class WitnessMode { Auto, On, Off };

// Auto resolves to On for n <= 1024 and Off above.
bool resolve_witnesses(WitnessMode mode, int n);

struct OracleOptions {
    int max_n = 24;                           // hard cap on exhaustive enumeration
    WitnessMode witnesses = WitnessMode::Auto;
    int jobs = 1;                             // enumeration partitions (deterministic merge)
};

// Exact Pareto frontier over all vertex subsets satisfying the instance's
// variant predicate with weight <= capacity. Ground truth for every DP.
ParetoSet oracle_pareto(const DskpInstance& inst, const OracleOptions& opts = {});

struct Decision {
    bool yes = false;
    std::optional<Bitset> witness;
};

// True with witness iff some frontier pair has weight <= s and profit >= d.
Decision oracle_decide(const DskpInstance& inst, const OracleOptions& opts = {});

// Minimum cardinality of a dominating set.
int oracle_min_dominating_set(const Graph& g, int max_n = 24);

// Maximum cardinality of a minimal dominating set (upper domination number).
int oracle_max_minimal_dominating_set(const Graph& g, int max_n = 24);

// Exact 0/1-knapsack Pareto frontier by the standard capacity-indexed DP.
ParetoSet knapsack_01(std::span<const std::int64_t> weights,
                      std::span<const std::int64_t> profits, std::int64_t cap);

// A minimum-cardinality vertex cover by exhaustive search.
Bitset min_vertex_cover(const Graph& g, int max_n = 24);

bool is_vertex_cover(const Graph& g, const Bitset& set);

}  // namespace dskp
