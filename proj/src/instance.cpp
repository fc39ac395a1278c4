#include "dskp/instance.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "dskp/error.hpp"

namespace dskp {

std::int64_t DskpInstance::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

std::int64_t DskpInstance::total_profit() const {
    return std::accumulate(profits.begin(), profits.end(), std::int64_t{0});
}

std::int64_t DskpInstance::set_weight(const Bitset& s) const {
    std::int64_t w = 0;
    s.for_each_set([&](int v) { w += weights[v]; });
    return w;
}

std::int64_t DskpInstance::set_profit(const Bitset& s) const {
    std::int64_t p = 0;
    s.for_each_set([&](int v) { p += profits[v]; });
    return p;
}

void DskpInstance::validate() const {
    const int n = graph.vertex_count();
    if (static_cast<int>(weights.size()) != n || static_cast<int>(profits.size()) != n)
        throw Error("instance: weight/profit arrays must match vertex count");
    for (int v = 0; v < n; ++v) {
        if (weights[v] < 0) throw Error("instance: negative weight at vertex " + std::to_string(v));
        if (profits[v] < 0) throw Error("instance: negative profit at vertex " + std::to_string(v));
    }
    if (capacity < 0) throw Error("instance: negative capacity");
    if (target < 0) throw Error("instance: negative target");
    if (variant == Variant::ExactK && (k < 1 || k > n))
        throw Error("instance: k out of range [1, n]");
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::int64_t parse_int(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    std::int64_t v;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw Error(std::string("parse: bad ") + what + " '" + tok + "'");
    }
    if (pos != tok.size()) throw Error(std::string("parse: bad ") + what + " '" + tok + "'");
    return v;
}

}  // namespace

DskpInstance parse_instance(std::istream& in) {
    std::string line;
    bool have_header = false;
    std::int64_t n = 0, m = 0;
    DskpInstance inst;
    std::vector<std::pair<int, int>> edges;
    int next_vertex = 0;
    std::int64_t edge_lines = 0;
    bool variant_allowed = false;  // k/minimal line may only follow the header

    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw Error("parse: duplicate header");
            if (toks.size() < 2 || toks[1] != "dskp") throw Error("parse: malformed header (expected 'p dskp')");
            if (toks.size() < 6) throw Error("parse: malformed header (s or d missing)");
            if (toks.size() > 6) throw Error("parse: malformed header (extra fields)");
            n = parse_int(toks[2], "vertex count");
            m = parse_int(toks[3], "edge count");
            inst.capacity = parse_int(toks[4], "capacity");
            inst.target = parse_int(toks[5], "target");
            if (n < 0 || m < 0) throw Error("parse: malformed header (negative size)");
            if (inst.capacity < 0) throw Error("parse: negative capacity");
            if (inst.target < 0) throw Error("parse: negative target");
            have_header = true;
            variant_allowed = true;
            continue;
        }
        if (!have_header) throw Error("parse: malformed header (first line must be 'p dskp ...')");
        if (toks[0] == "k") {
            if (!variant_allowed) throw Error("parse: 'k' line must immediately follow the header");
            if (toks.size() != 2) throw Error("parse: malformed 'k' line");
            inst.variant = Variant::ExactK;
            inst.k = static_cast<int>(parse_int(toks[1], "k"));
            variant_allowed = false;
            continue;
        }
        if (toks[0] == "minimal") {
            if (!variant_allowed) throw Error("parse: 'minimal' line must immediately follow the header");
            if (toks.size() != 1) throw Error("parse: malformed 'minimal' line");
            inst.variant = Variant::Minimal;
            variant_allowed = false;
            continue;
        }
        variant_allowed = false;
        if (toks[0] == "v") {
            if (toks.size() != 4) throw Error("parse: malformed vertex line '" + line + "'");
            std::int64_t id = parse_int(toks[1], "vertex id");
            if (id < 0 || id >= n) throw Error("parse: vertex id out of range: " + toks[1]);
            if (id < next_vertex) throw Error("parse: duplicate vertex line for id " + toks[1]);
            if (id > next_vertex)
                throw Error("parse: vertex ids must appear in order 0..n-1 (got " + toks[1] + ")");
            std::int64_t w = parse_int(toks[2], "weight");
            std::int64_t p = parse_int(toks[3], "profit");
            if (w < 0) throw Error("parse: negative weight at vertex " + toks[1]);
            if (p < 0) throw Error("parse: negative profit at vertex " + toks[1]);
            inst.weights.push_back(w);
            inst.profits.push_back(p);
            ++next_vertex;
            continue;
        }
        if (toks[0] == "e") {
            if (toks.size() != 3) throw Error("parse: malformed edge line '" + line + "'");
            std::int64_t u = parse_int(toks[1], "vertex id");
            std::int64_t v = parse_int(toks[2], "vertex id");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw Error("parse: vertex id out of range in edge line '" + line + "'");
            if (u == v) throw Error("parse: self-loop edge " + toks[1] + " " + toks[2]);
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            ++edge_lines;
            continue;
        }
        throw Error("parse: unrecognized line '" + line + "'");
    }
    if (!have_header) throw Error("parse: malformed header (missing 'p dskp' line)");
    if (next_vertex != n)
        throw Error("parse: expected " + std::to_string(n) + " vertex lines, got " +
                    std::to_string(next_vertex));
    if (edge_lines != m)
        throw Error("parse: expected " + std::to_string(m) + " edge lines, got " +
                    std::to_string(edge_lines));
    inst.graph = Graph::from_edges(static_cast<int>(n), edges);
    inst.validate();
    return inst;
}

DskpInstance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

std::string write_instance(const DskpInstance& inst) {
    std::ostringstream out;
    const int n = inst.vertex_count();
    out << "p dskp " << n << ' ' << inst.graph.edge_count() << ' ' << inst.capacity << ' '
        << inst.target << '\n';
    if (inst.variant == Variant::ExactK) out << "k " << inst.k << '\n';
    if (inst.variant == Variant::Minimal) out << "minimal\n";
    for (int v = 0; v < n; ++v)
        out << "v " << v << ' ' << inst.weights[v] << ' ' << inst.profits[v] << '\n';
    for (auto [u, v] : inst.graph.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

bool is_dominating_set(const Graph& g, const Bitset& set) {
    const int n = g.vertex_count();
    Bitset covered(n);
    set.for_each_set([&](int v) { covered |= g.closed_neighborhood(v); });
    return covered.count() == n;
}

bool is_minimal_dominating_set(const Graph& g, const Bitset& set) {
    if (!is_dominating_set(g, set)) return false;
    bool minimal = true;
    set.for_each_set([&](int v) {
        if (!minimal) return;
        Bitset reduced = set;
        reduced.reset(v);
        if (is_dominating_set(g, reduced)) minimal = false;
    });
    return minimal;
}

}  // namespace dskp
