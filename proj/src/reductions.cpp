#include "dskp/reductions.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "dskp/error.hpp"
#include "dskp/generators.hpp"
#include "dskp/oracle.hpp"

namespace dskp {

void Circuit::validate() const {
    if (input_count < 0) throw Error("circuit: negative input count");
    const int total = input_count + static_cast<int>(gates.size());
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        const Gate& gate = gates[gi];
        if (gate.operands.empty()) throw Error("circuit: gate without operands");
        for (int op : gate.operands)
            if (op < 0 || op >= input_count + static_cast<int>(gi))
                throw Error("circuit: operand must reference an input or an earlier gate");
        if (gate.kind == GateKind::ExactlyK &&
            (gate.k < 0 || gate.k > static_cast<int>(gate.operands.size())))
            throw Error("circuit: EXACTLY threshold out of range");
    }
    if (output < 0 || output >= total) throw Error("circuit: missing or dangling output");
}

namespace {

// Longest-path DP over the gate DAG; `count` scores a node, the result is the
// max score sum along any input-output path.
template <typename Score>
int path_dp(const Circuit& c, Score&& score) {
    std::vector<int> best(c.input_count + c.gates.size(), 0);
    for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
        int from = 0;
        for (int op : c.gates[gi].operands) from = std::max(from, best[op]);
        best[c.input_count + gi] = from + score(c.gates[gi]);
    }
    return best[c.output];
}

}  // namespace

int Circuit::weft() const {
    return path_dp(*this, [](const Gate& g) { return g.operands.size() > 2 ? 1 : 0; });
}

int Circuit::depth() const {
    return path_dp(*this, [](const Gate&) { return 1; });
}

bool eval_circuit(const Circuit& c, const Bitset& assignment) {
    if (assignment.size() != c.input_count) throw Error("circuit: assignment size mismatch");
    std::vector<char> value(c.input_count + c.gates.size(), 0);
    for (int i = 0; i < c.input_count; ++i) value[i] = assignment.test(i);
    for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
        const Circuit::Gate& gate = c.gates[gi];
        bool out = false;
        switch (gate.kind) {
            case Circuit::GateKind::Or:
                for (int op : gate.operands)
                    if (value[op]) {
                        out = true;
                        break;
                    }
                break;
            case Circuit::GateKind::And:
                out = true;
                for (int op : gate.operands)
                    if (!value[op]) {
                        out = false;
                        break;
                    }
                break;
            case Circuit::GateKind::ExactlyK: {
                int ones = 0;
                for (int op : gate.operands) ones += value[op];
                out = ones == gate.k;
                break;
            }
        }
        value[c.input_count + gi] = out;
    }
    return value[c.output];
}

bool wcs_satisfiable(const Circuit& c, int k, int max_inputs) {
    if (c.input_count > max_inputs) throw Error("wcs: too many inputs for enumeration");
    const std::uint64_t total = std::uint64_t{1} << c.input_count;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (std::popcount(mask) != k) continue;
        if (eval_circuit(c, Bitset::from_mask(mask, c.input_count))) return true;
    }
    return false;
}

std::string write_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "inputs " << c.input_count << '\n';
    auto ref = [&](int op) -> std::string {
        if (op < c.input_count) return "x" + std::to_string(op);
        return std::to_string(op - c.input_count + 1);
    };
    for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
        const Circuit::Gate& gate = c.gates[gi];
        out << "gate " << gi + 1 << ' ';
        if (gate.kind == Circuit::GateKind::Or)
            out << "OR:";
        else if (gate.kind == Circuit::GateKind::And)
            out << "AND:";
        else
            out << "EXACTLY " << gate.k << ':';
        for (int op : gate.operands) out << ' ' << ref(op);
        out << '\n';
    }
    out << "output " << ref(c.output) << '\n';
    return out.str();
}

Circuit parse_circuit(std::istream& in) {
    Circuit c;
    std::string line;
    bool have_inputs = false, have_output = false;
    auto parse_ref = [&](const std::string& tok) -> int {
        try {
            if (!tok.empty() && tok[0] == 'x') {
                int i = std::stoi(tok.substr(1));
                if (i < 0 || i >= c.input_count) throw Error("circuit parse: input out of range");
                return i;
            }
            int gid = std::stoi(tok);
            if (gid < 1 || gid > static_cast<int>(c.gates.size()) + 1)
                throw Error("circuit parse: gate id out of range");
            return c.input_count + gid - 1;
        } catch (const std::invalid_argument&) {
            throw Error("circuit parse: bad operand '" + tok + "'");
        }
    };
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "inputs") {
            if (have_inputs) throw Error("circuit parse: duplicate inputs line");
            if (!(ss >> c.input_count) || c.input_count < 0)
                throw Error("circuit parse: malformed inputs line");
            have_inputs = true;
            continue;
        }
        if (!have_inputs) throw Error("circuit parse: missing inputs line");
        if (tag == "gate") {
            int id;
            std::string kind;
            if (!(ss >> id >> kind)) throw Error("circuit parse: malformed gate line '" + line + "'");
            if (id != static_cast<int>(c.gates.size()) + 1)
                throw Error("circuit parse: gate ids must be sequential from 1");
            Circuit::Gate gate;
            if (kind == "OR:") {
                gate.kind = Circuit::GateKind::Or;
            } else if (kind == "AND:") {
                gate.kind = Circuit::GateKind::And;
            } else if (kind == "EXACTLY") {
                gate.kind = Circuit::GateKind::ExactlyK;
                std::string ktok;
                if (!(ss >> ktok) || ktok.empty() || ktok.back() != ':')
                    throw Error("circuit parse: malformed EXACTLY gate '" + line + "'");
                gate.k = std::stoi(ktok.substr(0, ktok.size() - 1));
            } else {
                throw Error("circuit parse: unknown gate kind '" + kind + "'");
            }
            std::string tok;
            while (ss >> tok) gate.operands.push_back(parse_ref(tok));
            // the gate being defined is not yet in c.gates, so parse_ref
            // already rejects forward references
            c.gates.push_back(std::move(gate));
            continue;
        }
        if (tag == "output") {
            std::string tok;
            if (!(ss >> tok)) throw Error("circuit parse: malformed output line");
            c.output = parse_ref(tok);
            have_output = true;
            continue;
        }
        throw Error("circuit parse: unrecognized line '" + line + "'");
    }
    if (!have_output) throw Error("circuit parse: missing output line");
    c.validate();
    return c;
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream ss(text);
    return parse_circuit(ss);
}

// --- transformers ----------------------------------------------------------

namespace {

DskpInstance unit_instance(const Graph& g, int k) {
    DskpInstance inst;
    inst.graph = g;
    inst.weights.assign(g.vertex_count(), 1);
    inst.profits.assign(g.vertex_count(), 1);
    inst.capacity = k;
    inst.target = k;
    return inst;
}

}  // namespace

DskpInstance reduce_ds_to_dskp(const Graph& g, int k) {
    if (k < 0) throw Error("ds2dskp: k must be non-negative");
    DskpInstance inst = unit_instance(g, k);
    inst.validate();
    return inst;
}

DskpInstance reduce_ds_to_kdskp(const Graph& g, int k) {
    if (k < 1 || k > g.vertex_count()) throw Error("ds2kdskp: k out of range [1, n]");
    DskpInstance inst = unit_instance(g, k);
    inst.variant = Variant::ExactK;
    inst.k = k;
    inst.validate();
    return inst;
}

DskpInstance reduce_dskp_to_bipartite(const DskpInstance& inst) {
    if (inst.variant != Variant::Plain) throw Error("bip: plain variant required");
    inst.validate();
    const int n = inst.vertex_count();
    // vertices: X copies 0..n-1, Y copies n..2n-1, z = 2n
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    for (auto [u, v] : inst.graph.edges()) {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(2 * n, n + i);
    DskpInstance out;
    out.graph = Graph::from_edges(2 * n + 1, edges);
    out.weights.assign(2 * n + 1, 0);
    out.profits.assign(2 * n + 1, 0);
    for (int i = 0; i < n; ++i) {
        out.weights[n + i] = inst.weights[i];
        out.profits[n + i] = inst.profits[i];
    }
    out.capacity = inst.capacity;
    out.target = inst.target;
    out.validate();
    if (!out.graph.two_coloring()) throw Error("bip: construction is not bipartite");
    return out;
}

DskpInstance reduce_knapsack_to_star(std::span<const std::int64_t> sizes,
                                     std::span<const std::int64_t> values, std::int64_t b,
                                     std::int64_t q) {
    if (sizes.size() != values.size()) throw Error("star: item arrays differ in length");
    const int n = static_cast<int>(sizes.size());
    DskpInstance out;
    out.graph = star_graph(n + 1);
    out.weights.assign(n + 1, 0);
    out.profits.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (sizes[i] < 0 || values[i] < 0) throw Error("star: negative item");
        out.weights[i + 1] = sizes[i];
        out.profits[i + 1] = values[i];
    }
    out.capacity = b;
    out.target = q;
    out.validate();
    return out;
}

DskpInstance reduce_uds_to_minimal_dskp(const Graph& g, int k, bool paper_weights) {
    if (k < 0) throw Error("uds2min: k must be non-negative");
    DskpInstance inst;
    inst.graph = g;
    inst.weights.assign(g.vertex_count(), 1);
    if (paper_weights)
        for (int v = 0; v < g.vertex_count(); ++v) inst.weights[v] = v % 2;
    inst.profits.assign(g.vertex_count(), 1);
    inst.capacity = k;
    inst.target = k;
    inst.variant = Variant::Minimal;
    inst.validate();
    return inst;
}

Circuit reduce_dskp_to_wcs(const DskpInstance& inst, int k) {
    inst.validate();
    const int n = inst.vertex_count();
    if (inst.variant != Variant::Plain) throw Error("wcs: plain variant required");
    for (int v = 0; v < n; ++v)
        if (inst.weights[v] != 1 || inst.profits[v] != 1)
            throw Error("wcs: unit weights and profits required");
    if (inst.capacity != k || inst.target != k) throw Error("wcs: s = d = k required");
    if (n < 1) throw Error("wcs: empty graph");

    Circuit c;
    c.input_count = n;
    // one domination gate per vertex: OR over its closed neighborhood
    for (int v = 0; v < n; ++v) {
        Circuit::Gate gate;
        gate.kind = Circuit::GateKind::Or;
        Bitset nb = inst.graph.closed_neighborhood(v);
        nb.for_each_set([&](int u) { gate.operands.push_back(u); });
        c.gates.push_back(std::move(gate));
    }
    Circuit::Gate d_out;
    d_out.kind = Circuit::GateKind::And;
    for (int v = 0; v < n; ++v) d_out.operands.push_back(n + v);
    c.gates.push_back(std::move(d_out));
    Circuit::Gate s_out;
    s_out.kind = Circuit::GateKind::ExactlyK;
    s_out.k = k;
    for (int v = 0; v < n; ++v) s_out.operands.push_back(v);
    c.gates.push_back(std::move(s_out));
    Circuit::Gate f_out;
    f_out.kind = Circuit::GateKind::And;
    f_out.operands = {n + n, n + n + 1};  // D_out, S_out
    c.gates.push_back(std::move(f_out));
    c.output = n + n + 2;
    c.validate();
    return c;
}

// --- soundness -------------------------------------------------------------

namespace {

std::string describe_graph_instance(const Graph& g, int k) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " k=" << k << " edges:";
    for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
    return out.str();
}

Graph random_soundness_graph(Rng& rng, int max_n) {
    const int n = static_cast<int>(rng.uniform(1, max_n));
    static constexpr double kDensities[] = {0.2, 0.4, 0.6};
    const double p = kDensities[rng.uniform(0, 2)];
    return gnp_graph(rng, n, p);
}

}  // namespace

SoundnessReport check_reduction_soundness(const std::string& rule, int trials, int max_n,
                                          std::uint64_t seed) {
    SoundnessReport report;
    report.rule = rule;
    report.trials = trials;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        bool src = false, tgt = false;
        std::string source_text;
        if (rule == "ds2dskp" || rule == "ds2kdskp" || rule == "wcs" || rule == "uds2min") {
            Graph g = random_soundness_graph(rng, max_n);
            const int n = g.vertex_count();
            const int k = static_cast<int>(rng.uniform(1, n));
            source_text = describe_graph_instance(g, k);
            if (rule == "uds2min") {
                // Upper Dominating Set: a minimal dominating set of size >= k
                src = oracle_max_minimal_dominating_set(g) >= k;
                tgt = oracle_decide(reduce_uds_to_minimal_dskp(g, k)).yes;
            } else {
                src = oracle_min_dominating_set(g) <= k;
                if (rule == "ds2dskp")
                    tgt = oracle_decide(reduce_ds_to_dskp(g, k)).yes;
                else if (rule == "ds2kdskp")
                    tgt = oracle_decide(reduce_ds_to_kdskp(g, k)).yes;
                else
                    tgt = wcs_satisfiable(reduce_dskp_to_wcs(reduce_ds_to_dskp(g, k), k), k);
            }
        } else if (rule == "bip") {
            Graph g = random_soundness_graph(rng, max_n);
            DskpInstance inst =
                random_instance(rng, std::move(g), 8, 8, 0, 0);
            inst.capacity = rng.uniform(0, inst.total_weight());
            inst.target = rng.uniform(0, inst.total_profit());
            source_text = write_instance(inst);
            src = oracle_decide(inst).yes;
            tgt = oracle_decide(reduce_dskp_to_bipartite(inst)).yes;
        } else if (rule == "star") {
            const int items = static_cast<int>(rng.uniform(0, max_n));
            std::vector<std::int64_t> sizes(items), values(items);
            for (int i = 0; i < items; ++i) {
                sizes[i] = rng.uniform(0, 9);
                values[i] = rng.uniform(0, 9);
            }
            std::int64_t total = 0;
            for (auto s : sizes) total += s;
            const std::int64_t b = rng.uniform(0, total);
            // frontier comparison rather than a single decision
            DskpInstance star = reduce_knapsack_to_star(sizes, values, b, 0);
            std::ostringstream items_text;
            items_text << "items:";
            for (int i = 0; i < items; ++i) items_text << " (" << sizes[i] << ',' << values[i] << ')';
            items_text << " b=" << b;
            source_text = items_text.str();
            src = true;
            tgt = oracle_pareto(star) == knapsack_01(sizes, values, b);
        } else {
            throw Error("soundness: unknown rule '" + rule + "'");
        }
        const bool match = (rule == "star") ? tgt : (src == tgt);
        if (!match) {
            ++report.mismatches;
            std::ostringstream why;
            why << source_text;
            if (rule == "star")
                why << " | star frontier != knapsack frontier";
            else
                why << " | source=" << (src ? "yes" : "no") << " target=" << (tgt ? "yes" : "no");
            report.counterexamples.push_back(why.str());
        }
    }
    return report;
}

}  // namespace dskp
