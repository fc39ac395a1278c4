// dskp: exact solvers, generators, reductions and benchmarks for the
// Dominating Set Knapsack problem. See docs/formats.md for file formats.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dskp/decomposition.hpp"
#include "dskp/error.hpp"
#include "dskp/generators.hpp"
#include "dskp/instance.hpp"
#include "dskp/oracle.hpp"
#include "dskp/reductions.hpp"
#include "dskp/tree_dp.hpp"
#include "dskp/treewidth_dp.hpp"
#include "dskp/vc_dp.hpp"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

dskp::DskpInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dskp::Error("cannot open input file '" + path + "'");
    return dskp::parse_instance(in);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw dskp::Error("cannot open output file '" + path + "'");
    out << text;
}

dskp::Bitset parse_vertex_list(const std::string& list, int n) {
    dskp::Bitset set(n);
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v;
        try {
            v = std::stoi(tok);
        } catch (const std::exception&) {
            throw dskp::Error("bad vertex id '" + tok + "' in --vc list");
        }
        if (v < 0 || v >= n) throw dskp::Error("vertex id " + tok + " out of range in --vc list");
        set.set(v);
    }
    return set;
}

struct SolveArgs {
    std::string algo;
    std::string input;
    std::string td_file;
    std::string vc_list;
    bool pareto = false;
    bool witness = false;
    bool json_out = false;
    bool verify = false;
    int jobs = 1;
};

dskp::ParetoSet run_algo(const std::string& algo, const dskp::DskpInstance& inst,
                         const SolveArgs& args, dskp::WitnessMode mode) {
    using namespace dskp;
    if (algo == "oracle") {
        OracleOptions opts;
        opts.witnesses = mode;
        opts.jobs = args.jobs;
        return oracle_pareto(inst, opts);
    }
    if (algo == "tree") {
        TreeDpOptions opts;
        opts.witnesses = mode;
        return tree_dp_pareto(inst, 0, opts);
    }
    if (algo == "treewidth") {
        TreeDecomposition td;
        if (!args.td_file.empty()) {
            std::ifstream in(args.td_file);
            if (!in) throw Error("cannot open td file '" + args.td_file + "'");
            td = parse_td(in);
            td.validate(inst.graph);
        } else {
            std::cerr << "warning: no --td given, falling back to heuristic decomposition\n";
            td = heuristic_td(inst.graph);
        }
        TwDpOptions opts;
        opts.witnesses = mode;
        return tw_dp_pareto(inst, make_nice(td), opts);
    }
    if (algo == "vck") {
        Bitset cover = args.vc_list.empty() ? min_vertex_cover(inst.graph)
                                            : parse_vertex_list(args.vc_list, inst.vertex_count());
        VcDpOptions opts;
        opts.witnesses = mode;
        return vck_pareto(inst, cover, opts);
    }
    throw Error("unknown algorithm '" + algo + "'");
}

int cmd_solve(const SolveArgs& args) {
    using namespace dskp;
    DskpInstance inst = load_instance(args.input);
    if ((args.algo == "tree" || args.algo == "treewidth" || args.algo == "vck") &&
        inst.variant != Variant::Plain)
        throw Error("algorithm '" + args.algo + "' supports only the plain variant");
    const WitnessMode mode = args.witness ? WitnessMode::On : WitnessMode::Auto;
    ParetoSet frontier = run_algo(args.algo, inst, args, mode);

    if (args.verify && inst.vertex_count() <= 20 && args.algo != "oracle") {
        OracleOptions opts;
        opts.witnesses = WitnessMode::Off;
        if (oracle_pareto(inst, opts) != frontier) {
            std::cerr << "VERIFY MISMATCH: " << args.algo
                      << " frontier differs from the oracle frontier\n";
            return kExitError;
        }
    }

    const WpPair* best = frontier.best_pair(inst.capacity);
    const bool yes = best && best->profit >= inst.target;

    if (args.json_out) {
        json out;
        out["result"] = yes ? "yes" : "no";
        if (best)
            out["optimal"] = {{"weight", best->weight}, {"profit", best->profit}};
        else
            out["optimal"] = nullptr;
        if (args.pareto) {
            json arr = json::array();
            for (const auto& p : frontier.pairs()) arr.push_back({p.weight, p.profit});
            out["pareto"] = arr;
        }
        if (args.witness) {
            if (best && best->witness)
                out["witness"] = best->witness->to_vector();
            else
                out["witness"] = nullptr;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "RESULT " << (yes ? "yes" : "no") << '\n';
        if (best)
            std::cout << "OPTIMAL " << best->weight << ' ' << best->profit << '\n';
        else
            std::cout << "OPTIMAL none\n";
        if (args.pareto)
            for (const auto& p : frontier.pairs())
                std::cout << "PARETO (" << p.weight << ',' << p.profit << ")\n";
        if (args.witness) {
            std::cout << "WITNESS";
            if (best && best->witness)
                for (int v : best->witness->to_vector()) std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
    return yes ? kExitYes : kExitNo;
}

struct GenArgs {
    dskp::GenParams params;
    std::string output;
};

int cmd_generate(GenArgs& args) {
    dskp::DskpInstance inst = dskp::generate_instance(args.params);
    write_output(args.output, dskp::write_instance(inst));
    return 0;
}

struct ReduceArgs {
    std::string rule;
    std::string input;
    std::string output;
    int k = -1;
    bool paper_weights = false;
};

// items file for the star rule: "p knap <n> <b> <q>" then n lines "i <size> <value>"
void parse_knapsack_file(std::istream& in, std::vector<std::int64_t>& sizes,
                         std::vector<std::int64_t>& values, std::int64_t& b, std::int64_t& q) {
    std::string line;
    bool have_header = false;
    long n = -1;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ss >> kind >> n >> b >> q) || kind != "knap")
                throw dskp::Error("knapsack parse: malformed header");
            have_header = true;
            continue;
        }
        if (tag == "i") {
            std::int64_t s, v;
            if (!have_header || !(ss >> s >> v)) throw dskp::Error("knapsack parse: malformed item");
            sizes.push_back(s);
            values.push_back(v);
            continue;
        }
        throw dskp::Error("knapsack parse: unrecognized line '" + line + "'");
    }
    if (!have_header) throw dskp::Error("knapsack parse: missing header");
    if (static_cast<long>(sizes.size()) != n)
        throw dskp::Error("knapsack parse: item count mismatch");
}

int cmd_reduce(const ReduceArgs& args) {
    using namespace dskp;
    if (args.rule == "star") {
        std::ifstream in(args.input);
        if (!in) throw Error("cannot open input file '" + args.input + "'");
        std::vector<std::int64_t> sizes, values;
        std::int64_t b = 0, q = 0;
        parse_knapsack_file(in, sizes, values, b, q);
        write_output(args.output, write_instance(reduce_knapsack_to_star(sizes, values, b, q)));
        return 0;
    }
    DskpInstance inst = load_instance(args.input);
    if (args.rule == "bip") {
        write_output(args.output, write_instance(reduce_dskp_to_bipartite(inst)));
        return 0;
    }
    if (args.k < 0) throw Error("rule '" + args.rule + "' requires --k");
    if (args.rule == "ds2dskp")
        write_output(args.output, write_instance(reduce_ds_to_dskp(inst.graph, args.k)));
    else if (args.rule == "ds2kdskp")
        write_output(args.output, write_instance(reduce_ds_to_kdskp(inst.graph, args.k)));
    else if (args.rule == "uds2min")
        write_output(args.output,
                     write_instance(reduce_uds_to_minimal_dskp(inst.graph, args.k, args.paper_weights)));
    else if (args.rule == "wcs")
        write_output(args.output, write_circuit(reduce_dskp_to_wcs(inst, args.k)));
    else
        throw Error("unknown rule '" + args.rule + "'");
    return 0;
}

struct BenchArgs {
    std::string family = "random-tree";
    std::string algo = "tree";
    std::vector<int> ns;
    std::vector<std::int64_t> ss;
    std::int64_t wmax = 8, amax = 8;
    double zero_frac = 0.0;
    std::uint64_t seed = 1;
    int repeats = 3;
    double p = 0.3;
};

int cmd_bench(const BenchArgs& args) {
    using namespace dskp;
    std::cout << "family,n,s,algo,millis,frontier_size\n";
    for (int n : args.ns) {
        GenParams params;
        params.family = args.family;
        params.n = n;
        params.p = args.p;
        params.wmax = args.wmax;
        params.amax = args.amax;
        params.zero_frac = args.zero_frac;
        params.seed = args.seed;
        params.s = 0;  // overwritten per s below
        params.d = 0;
        for (std::int64_t s : args.ss) {
            params.s = s;
            DskpInstance inst = generate_instance(params);
            std::vector<double> times;
            std::size_t frontier_size = 0;
            for (int r = 0; r < args.repeats; ++r) {
                SolveArgs sargs;
                sargs.algo = args.algo;
                const auto start = std::chrono::steady_clock::now();
                ParetoSet frontier = run_algo(args.algo, inst, sargs, WitnessMode::Off);
                const auto stop = std::chrono::steady_clock::now();
                times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
                frontier_size = frontier.size();
            }
            std::sort(times.begin(), times.end());
            const double median = times[times.size() / 2];
            std::cout << args.family << ',' << n << ',' << s << ',' << args.algo << ',' << median
                      << ',' << frontier_size << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers and reductions for the Dominating Set Knapsack problem"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
    solve->add_option("--algo", solve_args.algo, "oracle|tree|treewidth|vck")->required();
    solve->add_option("--input", solve_args.input, "instance file")->required();
    solve->add_option("--td", solve_args.td_file, "PACE .td decomposition (treewidth algo)");
    solve->add_option("--vc", solve_args.vc_list, "comma-separated vertex cover (vck algo)");
    solve->add_flag("--pareto", solve_args.pareto, "print the full frontier");
    solve->add_flag("--witness", solve_args.witness, "print an optimal vertex set");
    solve->add_flag("--json", solve_args.json_out, "JSON output");
    solve->add_flag("--verify", solve_args.verify, "cross-check against the oracle (n <= 20)");
    solve->add_option("--jobs", solve_args.jobs, "enumeration threads for the oracle");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--family", gen_args.params.family,
                    "star|path|random-tree|gnp|split|figure1")
        ->required();
    gen->add_option("--n", gen_args.params.n, "vertex count");
    gen->add_option("--p", gen_args.params.p, "edge probability (gnp, split)");
    gen->add_option("--wmax", gen_args.params.wmax, "max weight (min 1)");
    gen->add_option("--amax", gen_args.params.amax, "max profit (min 1)");
    gen->add_option("--zero-frac", gen_args.params.zero_frac,
                    "probability of zeroing a vertex weight");
    gen->add_option("--seed", gen_args.params.seed, "rng seed");
    std::int64_t gen_s = -1, gen_d = -1;
    gen->add_option("--s", gen_s, "capacity (default: total weight / 2)");
    gen->add_option("--d", gen_d, "target (default: total profit / 2)");
    gen->add_option("-o,--output", gen_args.output, "output file (default stdout)");

    ReduceArgs reduce_args;
    CLI::App* reduce = app.add_subcommand("reduce", "Transform an instance");
    reduce->add_option("--rule", reduce_args.rule, "ds2dskp|ds2kdskp|bip|star|uds2min|wcs")
        ->required();
    reduce->add_option("--input", reduce_args.input, "input file")->required();
    reduce->add_option("--k", reduce_args.k, "parameter k (ds2dskp, ds2kdskp, uds2min, wcs)");
    reduce->add_flag("--paper-weights", reduce_args.paper_weights,
                     "uds2min: 0/1 weight split instead of all-unit");
    reduce->add_option("-o,--output", reduce_args.output, "output file (default stdout)");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Time solves, CSV on stdout");
    bench->add_option("--family", bench_args.family, "instance family")->required();
    bench->add_option("--algo", bench_args.algo, "oracle|tree|treewidth|vck")->required();
    bench->add_option("--n", bench_args.ns, "vertex counts")->required()->delimiter(',');
    bench->add_option("--s", bench_args.ss, "capacities")->required()->delimiter(',');
    bench->add_option("--wmax", bench_args.wmax, "max weight");
    bench->add_option("--amax", bench_args.amax, "max profit");
    bench->add_option("--zero-frac", bench_args.zero_frac,
                      "probability of zeroing a vertex weight");
    bench->add_option("--seed", bench_args.seed, "rng seed");
    bench->add_option("--repeats", bench_args.repeats, "runs per point (median)");
    bench->add_option("--p", bench_args.p, "edge probability");

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(solve_args);
        if (gen->parsed()) {
            if (gen_s >= 0) gen_args.params.s = gen_s;
            if (gen_d >= 0) gen_args.params.d = gen_d;
            return cmd_generate(gen_args);
        }
        if (reduce->parsed()) return cmd_reduce(reduce_args);
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const dskp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
