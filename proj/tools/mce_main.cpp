#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mce/bit_matrix.hpp"
#include "mce/degeneracy.hpp"
#include "mce/enumerate.hpp"
#include "mce/errors.hpp"
#include "mce/generators.hpp"
#include "mce/graph.hpp"
#include "mce/io.hpp"
#include "mce/oracle.hpp"
#include "mce/sink.hpp"

namespace {

using namespace mce;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

GraphFormat parse_format(const std::string& name) {
    if (name == "edges") return GraphFormat::EdgeList;
    if (name == "dimacs") return GraphFormat::Dimacs;
    throw Error("unknown format: " + name);
}

Graph load_input(const std::string& path, const std::string& format) {
    bool mismatch = false;
    Graph g = read_graph_file(path, parse_format(format), &mismatch);
    if (mismatch)
        std::cerr << "warning: " << path << ": edge count differs from header\n";
    return g;
}

// Timed per-algorithm pipeline: degeneracy ordering (hybrid/degen) and
// matrix construction (tomita) count toward the algorithm, parsing and
// graph construction do not.
EnumStats run_algorithm(const std::string& algorithm, const Graph& g, CliqueSink& sink,
                        std::uint32_t matrix_cap, double& elapsed) {
    auto start = std::chrono::steady_clock::now();
    EnumStats stats;
    if (algorithm == "tomita")
        stats = enumerate_tomita(g, sink, matrix_cap);
    else if (algorithm == "maxdegree")
        stats = enumerate_maxdegree(g, sink);
    else if (algorithm == "hybrid")
        stats = enumerate_hybrid(g, sink);
    else if (algorithm == "degen")
        stats = enumerate_degen(g, sink);
    else
        throw Error("unknown algorithm: " + algorithm);
    elapsed = seconds_since(start);
    return stats;
}

struct RunOptions {
    std::string algorithm, input, format = "edges", output;
    bool count_only = false;
    std::uint32_t matrix_cap = kDefaultMatrixCap;
};

int cmd_run(const RunOptions& opt) {
    Graph g = load_input(opt.input, opt.format);
    DegeneracyOrder ord = degeneracy_ordering(g);

    CliqueSink sink = opt.output.empty() ? CliqueSink::count_only() : CliqueSink::collect();
    double elapsed = 0.0;
    run_algorithm(opt.algorithm, g, sink, opt.matrix_cap, elapsed);

    std::cout << "input=" << opt.input << '\n'
              << "algorithm=" << opt.algorithm << '\n'
              << "n=" << g.vertex_count() << '\n'
              << "m=" << g.edge_count() << '\n'
              << "d=" << ord.degeneracy << '\n'
              << "mu=" << sink.count() << '\n';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", elapsed);
    std::cout << "seconds=" << buf << '\n';

    if (!opt.output.empty()) {
        CliqueList canonical = canonicalize(sink.cliques());
        if (opt.output == "-") {
            write_cliques(g, canonical, std::cout);
        } else {
            std::ofstream out(opt.output);
            if (!out) throw Error("cannot open " + opt.output);
            write_cliques(g, canonical, out);
            out.flush();
            if (!out) throw Error("write failed: " + opt.output);
        }
    }
    return kExitOk;
}

struct GenOptions {
    std::string family;
    std::vector<std::string> params;
    std::string output;
};

int cmd_gen(const GenOptions& opt) {
    auto need = [&](std::size_t count) {
        if (opt.params.size() != count)
            throw UsageError("gen " + opt.family + ": expected " + std::to_string(count) +
                             " parameter(s)");
    };
    Graph g;
    if (opt.family == "moon-moser") {
        need(1);
        g = moon_moser(std::stoul(opt.params[0]));
    } else if (opt.family == "gnp") {
        need(3);
        g = gnp(std::stoul(opt.params[0]), std::stod(opt.params[1]),
                std::stoull(opt.params[2]));
    } else if (opt.family == "grid") {
        need(4);
        g = grid_network(std::stoul(opt.params[0]), std::stoul(opt.params[1]),
                         std::stod(opt.params[2]), std::stoull(opt.params[3]));
    } else {
        need(1);
        g = named_small(opt.family, std::stoul(opt.params[0]));
    }

    if (opt.output == "-") {
        write_edge_list(g, std::cout);
    } else {
        std::ofstream out(opt.output);
        if (!out) throw Error("cannot open " + opt.output);
        write_edge_list(g, out);
        out.flush();
        if (!out) throw Error("write failed: " + opt.output);
    }
    std::cerr << "wrote " << opt.output << ": n=" << g.vertex_count()
              << " m=" << g.edge_count() << '\n';
    return kExitOk;
}

struct ValidateOptions {
    std::string input, format = "edges";
    std::uint32_t matrix_cap = kDefaultMatrixCap;
};

int cmd_validate(const ValidateOptions& opt) {
    Graph g = load_input(opt.input, opt.format);
    std::cout << "check graph-build: ok (n=" << g.vertex_count()
              << ", m=" << g.edge_count() << ")\n";

    DegeneracyOrder ord = degeneracy_ordering(g);
    if (!validate_ordering(g, ord)) {
        std::cout << "check degeneracy-ordering: FAILED\n";
        return kExitFailure;
    }
    std::cout << "check degeneracy-ordering: ok (d=" << ord.degeneracy << ")\n";

    struct VariantResult {
        std::string name;
        CliqueList cliques;
    };
    std::vector<VariantResult> results;
    for (const std::string name : {"tomita", "maxdegree", "hybrid", "degen"}) {
        CliqueSink sink = CliqueSink::collect();
        try {
            double elapsed = 0.0;
            run_algorithm(name, g, sink, opt.matrix_cap, elapsed);
        } catch (const CapExceeded&) {
            std::cout << "check variant " << name << ": skipped (matrix cap)\n";
            continue;
        }
        results.push_back({name, canonicalize(sink.cliques())});
        std::cout << "check variant " << name << ": mu=" << results.back().cliques.size()
                  << '\n';
    }

    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].cliques != results[0].cliques) {
            std::cout << "check cross-variant agreement: FAILED (" << results[0].name
                      << " vs " << results[i].name << ")\n";
            return kExitFailure;
        }
    }
    std::cout << "check cross-variant agreement: ok\n";

    // Every degen-reported set must be a clique with no common neighbor.
    const CliqueList& reference = results.back().cliques;
    for (const auto& clique : reference) {
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                if (!g.has_edge(clique[i], clique[j])) {
                    std::cout << "check soundness: FAILED (non-adjacent pair)\n";
                    return kExitFailure;
                }
        for (vertex_t w = 0; w < g.vertex_count(); ++w) {
            bool inside = std::binary_search(clique.begin(), clique.end(), w);
            if (inside) continue;
            bool adjacent_to_all = true;
            for (vertex_t v : clique)
                if (!g.has_edge(w, v)) {
                    adjacent_to_all = false;
                    break;
                }
            if (adjacent_to_all) {
                std::cout << "check maximality: FAILED\n";
                return kExitFailure;
            }
        }
    }
    std::cout << "check soundness+maximality: ok\n";

    int oracle_modes = 0;
    if (g.vertex_count() <= 20) {
        if (brute_force_cliques_subsets(g) != reference) {
            std::cout << "check oracle (subsets): FAILED\n";
            return kExitFailure;
        }
        ++oracle_modes;
    }
    if (g.vertex_count() <= 200) {
        if (brute_force_cliques_pivotfree(g) != reference) {
            std::cout << "check oracle (pivot-free): FAILED\n";
            return kExitFailure;
        }
        ++oracle_modes;
    }
    if (oracle_modes > 0)
        std::cout << results.size() << " variants + oracle agree (mu="
                  << reference.size() << ")\n";
    else
        std::cout << results.size() << " variants agree (mu=" << reference.size()
                  << "; oracle skipped, graph too large)\n";
    return kExitOk;
}

struct BenchOptions {
    std::vector<std::string> inputs;
    std::vector<std::string> algorithms = {"tomita", "maxdegree", "hybrid", "degen"};
    std::string format = "edges";
    std::string table;
    std::uint32_t repeat = 1;
    std::uint32_t matrix_cap = kDefaultMatrixCap;
};

int cmd_bench(const BenchOptions& opt) {
    std::vector<BenchRow> rows;
    for (const std::string& input : opt.inputs) {
        Graph g = load_input(input, opt.format);
        DegeneracyOrder ord = degeneracy_ordering(g);
        std::string stem = input;
        if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
            stem = stem.substr(slash + 1);

        for (const std::string& algorithm : opt.algorithms) {
            BenchRow row;
            row.graph = stem;
            row.n = g.vertex_count();
            row.m = g.edge_count();
            row.degeneracy = ord.degeneracy;
            row.algorithm = algorithm;
            try {
                std::optional<double> best;
                std::uint64_t mu = 0;
                for (std::uint32_t k = 0; k < std::max(opt.repeat, 1u); ++k) {
                    CliqueSink sink = CliqueSink::count_only();
                    double elapsed = 0.0;
                    run_algorithm(algorithm, g, sink, opt.matrix_cap, elapsed);
                    mu = sink.count();
                    if (!best || elapsed < *best) best = elapsed;
                }
                row.mu = mu;
                row.seconds = best; // best-of-K
            } catch (const CapExceeded&) {
                // leave mu/seconds as NA
            }
            rows.push_back(std::move(row));
            std::cerr << "bench: " << stem << " " << algorithm << " done\n";
        }
    }
    if (opt.table == "-") {
        write_bench_table(rows, std::cout);
    } else {
        std::ofstream out(opt.table);
        if (!out) throw Error("cannot open " + opt.table);
        write_bench_table(rows, out);
        out.flush();
        if (!out) throw Error("write failed: " + opt.table);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal clique enumeration toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> kAlgorithms = {"tomita", "maxdegree", "hybrid", "degen"};
    const std::vector<std::string> kFormats = {"edges", "dimacs"};
    const std::vector<std::string> kFamilies = {"moon-moser", "gnp",  "grid", "complete",
                                                "path",       "cycle", "star"};

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "enumerate maximal cliques of one graph");
    run->add_option("--algorithm", run_opt.algorithm, "tomita|maxdegree|hybrid|degen")
        ->required()
        ->check(CLI::IsMember(kAlgorithms));
    run->add_option("--input", run_opt.input, "input file ('-' for stdin)")->required();
    run->add_option("--format", run_opt.format, "edges|dimacs")
        ->check(CLI::IsMember(kFormats));
    run->add_flag("--count-only", run_opt.count_only, "count cliques without storing them");
    run->add_option("--output", run_opt.output, "write cliques here ('-' for stdout)");
    run->add_option("--matrix-cap", run_opt.matrix_cap,
                    "vertex cap for the tomita adjacency matrix");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->add_option("family", gen_opt.family,
                    "moon-moser|gnp|grid|complete|path|cycle|star")
        ->required()
        ->check(CLI::IsMember(kFamilies));
    gen->add_option("params", gen_opt.params, "family parameters");
    gen->add_option("--output", gen_opt.output, "output file ('-' for stdout)")->required();

    ValidateOptions val_opt;
    auto* validate = app.add_subcommand("validate",
                                        "cross-check all variants and the oracle");
    validate->add_option("--input", val_opt.input, "input file")->required();
    validate->add_option("--format", val_opt.format, "edges|dimacs")
        ->check(CLI::IsMember(kFormats));
    validate->add_option("--matrix-cap", val_opt.matrix_cap, "tomita matrix cap");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "timing table over several graphs");
    bench->add_option("--inputs", bench_opt.inputs, "input files")->required();
    bench->add_option("--algorithms", bench_opt.algorithms, "subset of variants")
        ->delimiter(',')
        ->check(CLI::IsMember(kAlgorithms));
    bench->add_option("--format", bench_opt.format, "edges|dimacs")
        ->check(CLI::IsMember(kFormats));
    bench->add_option("--repeat", bench_opt.repeat, "repetitions; best time wins");
    bench->add_option("--table", bench_opt.table, "output CSV ('-' for stdout)")
        ->required();
    bench->add_option("--matrix-cap", bench_opt.matrix_cap, "tomita matrix cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (run_opt.count_only && !run_opt.output.empty())
                throw Error("--count-only and --output are mutually exclusive");
            return cmd_run(run_opt);
        }
        if (gen->parsed()) return cmd_gen(gen_opt);
        if (validate->parsed()) return cmd_validate(val_opt);
        if (bench->parsed()) return cmd_bench(bench_opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
