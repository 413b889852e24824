// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
//
// ncsp: near-conservativeness check and all-pairs shortest simple paths.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncsp/bench.hpp"
#include "ncsp/decomposition.hpp"
#include "ncsp/generator.hpp"
#include "ncsp/instance_io.hpp"
#include "ncsp/oracle.hpp"
#include "ncsp/path_recon.hpp"

namespace {

enum ExitCode { kOk = 0, kMalformed = 2, kLimit = 3, kInternal = 4 };

ncsp::InstanceFile load(const std::string& path) {
    if (path == "-") {
        return ncsp::parse_instance(std::cin);
    }
    return ncsp::read_instance_file(path);
}

std::string value(ncsp::Weight w) {
    return ncsp::is_infinite(w) ? "inf" : std::to_string(w);
}

void print_route(std::ostream& out, const char* tag, const ncsp::Route& route, bool with_length) {
    out << tag;
    if (with_length) {
        out << ' ' << route.length();
    }
    for (ncsp::Vertex v : route.vertices()) {
        out << ' ' << v + 1;
    }
    out << '\n';
}

void print_witness(std::ostream& out, const ncsp::Witness& w) {
    out << "witness " << ncsp::to_string(w.kind);
    if (w.kind == ncsp::WitnessKind::forest_cycle) {
        for (ncsp::Vertex v : w.forest_cycle) {
            out << ' ' << v + 1;
        }
    } else if (w.violation_u != ncsp::kNoVertex) {
        out << ' ' << w.violation_u + 1 << ' ' << w.violation_v + 1;
    }
    out << '\n';
    print_route(out, "cycle", w.cycle, true);
    if (w.component >= 0) {
        out << "unit component " << w.component + 1 << " block " << w.block + 1 << '\n';
    }
}

void print_distances(std::ostream& out, const ncsp::DistanceMatrix& d) {
    for (ncsp::Vertex s = 0; s < d.size(); ++s) {
        for (ncsp::Vertex t = 0; t < d.size(); ++t) {
            if (s != t) {
                out << "d " << s + 1 << ' ' << t + 1 << ' ' << value(d(s, t)) << '\n';
            }
        }
    }
}

ncsp::ApspOutcome run_solver(const std::string& path, int max_k) {
    return ncsp::solve(ncsp::to_digraph(load(path)), ncsp::SolveOptions{max_k});
}

int cmd_check(const std::string& path, int max_k) {
    const ncsp::ApspOutcome outcome = run_solver(path, max_k);
    std::cout << "status " << ncsp::to_string(outcome.verdict) << '\n';
    if (outcome.witness) {
        print_witness(std::cout, *outcome.witness);
    }
    return kOk;
}

int cmd_apsp(const std::string& path, int max_k) {
    const ncsp::ApspOutcome outcome = run_solver(path, max_k);
    std::ostringstream out;
    out << "status " << ncsp::to_string(outcome.verdict) << '\n';
    if (outcome.witness) {
        print_witness(out, *outcome.witness);
    } else {
        print_distances(out, *outcome.distances);
    }
    std::cout << out.str();
    return kOk;
}

int cmd_query(const std::string& path, int max_k, long long from, long long to) {
    const ncsp::ApspOutcome outcome = run_solver(path, max_k);
    if (!outcome.solved()) {
        std::cout << "status " << ncsp::to_string(outcome.verdict) << '\n';
        print_witness(std::cout, *outcome.witness);
        return kOk;
    }
    const auto n = outcome.distances->size();
    if (from < 1 || from > n || to < 1 || to > n) {
        throw ncsp::MalformedInput("query vertex outside 1.." + std::to_string(n));
    }
    const auto s = static_cast<ncsp::Vertex>(from - 1);
    const auto t = static_cast<ncsp::Vertex>(to - 1);
    const ncsp::Weight d = (*outcome.distances)(s, t);
    std::cout << "dist " << value(d) << '\n';
    if (ncsp::is_finite(d)) {
        const ncsp::Path p = ncsp::extract_path(outcome, s, t);
        std::cout << "path";
        for (ncsp::Vertex v : p.vertices) {
            std::cout << ' ' << v + 1;
        }
        std::cout << '\n';
    }
    return kOk;
}

int cmd_oracle(const std::string& path) {
    const ncsp::InstanceFile instance = load(path);
    const ncsp::WeightedDigraph g = ncsp::to_digraph(instance);
    const ncsp::oracle::OracleVerdict verdict = ncsp::oracle::solve(g);
    std::ostringstream out;
    out << "status " << (verdict.nearly_conservative ? "nearly-conservative" : "not-nearly-conservative") << '\n';
    if (verdict.worst_cycle) {
        print_route(out, "cycle", *verdict.worst_cycle, true);
    }
    if (verdict.distances) {
        print_distances(out, *verdict.distances);
    }
    std::cout << out.str();
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shortest simple paths in nearly conservative digraphs"};
    app.require_subcommand(1);
    int max_k = ncsp::kDefaultMaxTrees;
    app.add_option("--max-k", max_k, "Largest number of negative trees per weak block")
        ->envname("NCD_MAX_K")
        ->check(CLI::Range(0, 30));

    std::string input = "-";
    auto add_input = [&](CLI::App* sub) { sub->add_option("instance", input, "Instance file, '-' for stdin"); };

    auto* check = app.add_subcommand("check", "Decide near-conservativeness, print a witness if it fails");
    add_input(check);
    auto* apsp = app.add_subcommand("apsp", "All-pairs shortest simple path distances");
    add_input(apsp);
    auto* query = app.add_subcommand("query", "Distance and path for one pair");
    add_input(query);
    long long from = 0;
    long long to = 0;
    query->add_option("--from", from, "Source vertex (1-based)")->required();
    query->add_option("--to", to, "Target vertex (1-based)")->required();
    auto* oracle = app.add_subcommand("oracle", "Brute-force verdict and distances (n <= 10)");
    add_input(oracle);

    auto* gen = app.add_subcommand("gen", "Write a random instance");
    ncsp::GeneratorConfig config;
    std::string shape = "structured";
    std::string model = "potential";
    std::string output;
    gen->add_option("--shape", shape, "structured or random")->check(CLI::IsMember({"structured", "random"}));
    gen->add_option("--weights", model, "potential or uniform")->check(CLI::IsMember({"potential", "uniform"}));
    gen->add_option("--n", config.n, "Vertex count")->capture_default_str();
    gen->add_option("--arcs", config.arc_count, "Filler arcs (structured)")->capture_default_str();
    gen->add_option("--density", config.density, "Arc probability (random)")->capture_default_str();
    gen->add_option("--edge-density", config.edge_density, "Edge probability, > 0 gives a mixed instance (random)");
    gen->add_option("--trees", config.tree_count, "Negative trees (structured)")->capture_default_str();
    gen->add_option("--tree-size", config.tree_size, "Vertices per tree")->capture_default_str();
    gen->add_option("--sccs", config.scc_count, "Strongly connected components")->capture_default_str();
    gen->add_option("--blocks", config.blocks_per_component, "Weak blocks per component")->capture_default_str();
    gen->add_option("--min-weight", config.min_weight)->capture_default_str();
    gen->add_option("--max-weight", config.max_weight)->capture_default_str();
    gen->add_option("--seed", config.seed)->capture_default_str();
    gen->add_flag("--nearly-conservative", config.nearly_conservative_only, "Redraw until the solver accepts");
    gen->add_option("-o,--output", output, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Time the solver on single-block instances");
    ncsp::Vertex bench_n = 60;
    std::vector<int> ks{2, 4, 6, 8, 10, 12};
    int repeats = 3;
    std::uint64_t bench_seed = 1;
    bench->add_option("--n", bench_n)->capture_default_str();
    bench->add_option("--k", ks, "Tree counts")->delimiter(',');
    bench->add_option("--repeats", repeats)->capture_default_str();
    bench->add_option("--seed", bench_seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        if (*check) {
            return cmd_check(input, max_k);
        }
        if (*apsp) {
            return cmd_apsp(input, max_k);
        }
        if (*query) {
            return cmd_query(input, max_k, from, to);
        }
        if (*oracle) {
            return cmd_oracle(input);
        }
        if (*gen) {
            config.shape = shape == "random" ? ncsp::Shape::random : ncsp::Shape::structured;
            config.model = model == "uniform" ? ncsp::WeightModel::uniform : ncsp::WeightModel::potential;
            const std::string text = ncsp::emit_instance(ncsp::generate(config));
            if (output.empty()) {
                std::cout << text;
            } else {
                std::ofstream(output) << text;
            }
            return kOk;
        }
        if (*bench) {
            const auto rows = ncsp::run_bench(bench_n, ks, repeats, bench_seed, ncsp::SolveOptions{max_k});
            std::cout << "k n seconds\n";
            for (const ncsp::BenchRow& row : rows) {
                std::cout << row.k << ' ' << row.n << ' ' << row.seconds << '\n';
            }
            std::cout << "growth-per-2-trees " << ncsp::growth_ratio_per_two_trees(rows, 6) << '\n';
            return kOk;
        }
    } catch (const ncsp::MalformedInput& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return kMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kMalformed;
    } catch (const ncsp::LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return kLimit;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}
