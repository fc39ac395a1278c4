#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dskp/bitset.hpp"
#include "dskp/graph.hpp"

namespace dskp {

enum class Variant { Plain, ExactK, Minimal };

// A vertex-weighted, vertex-profited graph together with a knapsack capacity
// and a profit target. Immutable after construction.
struct DskpInstance {
    Graph graph;
    std::vector<std::int64_t> weights;  // w(u) >= 0
    std::vector<std::int64_t> profits;  // alpha(u) >= 0
    std::int64_t capacity = 0;          // s
    std::int64_t target = 0;            // d
    Variant variant = Variant::Plain;
    int k = 0;  // only meaningful for Variant::ExactK

    int vertex_count() const { return graph.vertex_count(); }
    std::int64_t total_weight() const;
    std::int64_t total_profit() const;

    std::int64_t set_weight(const Bitset& s) const;
    std::int64_t set_profit(const Bitset& s) const;

    // Throws Error if any structural invariant is violated.
    void validate() const;
};

// Reads the line-oriented DSKP text format. Adjacency is canonicalized.
DskpInstance parse_instance(std::istream& in);
DskpInstance parse_instance(const std::string& text);

// Canonical text form; parse(write(x)) == x.
std::string write_instance(const DskpInstance& inst);

// Closed-neighborhood domination: every vertex is in `set` or adjacent to a
// member of `set`.
bool is_dominating_set(const Graph& g, const Bitset& set);

// Dominating and no single-vertex removal leaves a dominating set.
bool is_minimal_dominating_set(const Graph& g, const Bitset& set);

}  // namespace dskp
