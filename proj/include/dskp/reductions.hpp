#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dskp/instance.hpp"

namespace dskp {

// DAG of OR / AND / EXACTLY-K gates over boolean inputs, single output.
// Operands reference inputs as 0..input_count-1 and gate j as
// input_count + j; gates appear in topological order.
struct Circuit {
    enum class GateKind { Or, And, ExactlyK };
    struct Gate {
        GateKind kind;
        int k = 0;  // ExactlyK only
        std::vector<int> operands;
    };

    int input_count = 0;
    std::vector<Gate> gates;
    int output = -1;  // operand reference

    void validate() const;

    // A gate is "large" when it has more than two operands; weft is the
    // maximum number of large gates on any input-to-output path.
    int weft() const;
    int depth() const;
};

bool eval_circuit(const Circuit& c, const Bitset& assignment);

// True iff some assignment with exactly k ones satisfies the circuit.
bool wcs_satisfiable(const Circuit& c, int k, int max_inputs = 24);

Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);
std::string write_circuit(const Circuit& c);

// --- instance transformers -------------------------------------------------

// Dominating Set (G, k): same graph, unit weights/profits, s = d = k.
DskpInstance reduce_ds_to_dskp(const Graph& g, int k);

// As above with the exact-size-k variant.
DskpInstance reduce_ds_to_kdskp(const Graph& g, int k);

// X-copies (zero weight/profit), Y-copies (original weight/profit), apex z
// adjacent to all of Y; edges {x_i, y_i} plus cross copies of the original
// edges. Output is 2-colorable by (X ∪ {z}) / Y.
DskpInstance reduce_dskp_to_bipartite(const DskpInstance& inst);

// Star K_{1,n}: free center, leaf i carrying item i, s = b, d = q.
DskpInstance reduce_knapsack_to_star(std::span<const std::int64_t> sizes,
                                     std::span<const std::int64_t> values, std::int64_t b,
                                     std::int64_t q);

// Upper Dominating Set (G, k): same graph, minimal variant, unit profits,
// s = d = k. Weights are all 1 by default; `paper_weights` applies an
// arbitrary 0/1 split instead (vertex parity).
DskpInstance reduce_uds_to_minimal_dskp(const Graph& g, int k, bool paper_weights = false);

// Weighted Circuit Satisfiability membership construction: one OR gate per
// vertex over its closed neighborhood, conjoined, AND an exactly-k
// cardinality gate over the inputs. Requires unit weights/profits and
// s = d = k.
Circuit reduce_dskp_to_wcs(const DskpInstance& inst, int k);

// --- soundness -------------------------------------------------------------

struct SoundnessReport {
    std::string rule;
    int trials = 0;
    int mismatches = 0;
    std::vector<std::string> counterexamples;  // source instances, verbatim
};

// Draws `trials` random source instances with n <= max_n and compares the
// source oracle's answer with the target oracle's answer on the transformed
// instance. Reproducible from (rule, trials, max_n, seed).
SoundnessReport check_reduction_soundness(const std::string& rule, int trials, int max_n,
                                          std::uint64_t seed);

}  // namespace dskp
