#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "oneplanar/generate.hpp"
#include "oneplanar/io.hpp"
#include "oneplanar/kernel_cyclo.hpp"
#include "oneplanar/kernel_treedepth.hpp"
#include "oneplanar/kernel_vc.hpp"
#include "oneplanar/run.hpp"

using namespace oneplanar;

namespace {

Graph load_graph(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

ConstraintSet load_constraints(const std::string& path, const Graph& g) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_constraints(in, g);
}

int cmd_decide(const std::string& input, const std::string& constraints,
               const RunConfig& cfg) {
    Graph g = load_graph(input);
    ConstraintSet cs = load_constraints(constraints, g);
    Report rep = run(cfg, g, cs);
    std::cout << emit_report(rep, cfg.output);
    return rep.exit_code();
}

int cmd_verify(const std::string& input, const std::string& witness_path,
               const std::string& constraints) {
    Graph g = load_graph(input);
    ConstraintSet cs = load_constraints(constraints, g);
    std::ifstream win(witness_path);
    if (!win) throw std::runtime_error("cannot open " + witness_path);
    CrossingWitness w = parse_witness(win, g);
    if (verify_witness(g, w, cs)) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid\n";
    return 1;
}

int cmd_kernel(const std::string& input, const std::string& strategy) {
    Graph g = load_graph(input);
    Strategy s = parse_strategy(strategy);
    if (s == Strategy::vc) {
        auto cover = vertex_cover(g, 10);
        if (!cover) throw std::runtime_error("no vertex cover of size <= 10");
        CoverKernel ck = vc_kernelize(g, *cover);
        std::cout << "k: " << cover->size() << "\n"
                  << "groups: " << ck.groups.size() << "\n"
                  << "records: " << ck.plan.records.size() << "\n"
                  << emit_graph(ck.kernel);
        return 0;
    }
    if (s == Strategy::cyclomatic) {
        CycloKernel ck = cyclo_kernelize(g);
        std::cout << "dropped_cycles: " << ck.dropped_cycles << "\n"
                  << "truncated_paths: " << ck.truncated_paths << "\n"
                  << "records: " << ck.plan.records.size() << "\n"
                  << emit_graph(ck.kernel);
        return 0;
    }
    if (s == Strategy::treedepth) {
        auto td = tree_depth(g, 8);
        if (!td) throw std::runtime_error("tree-depth exceeds 8");
        TdKernel k = td_kernelize(g, normalize_forest(g, td->second), 20, true);
        std::cout << "depth: " << td->first << "\n"
                  << "splits: " << k.splits << "\n"
                  << "instances: " << k.instances.size() << "\n";
        if (k.rejection) std::cout << "rejection: " << *k.rejection << "\n";
        for (const TdInstance& inst : k.instances)
            std::cout << "instance " << inst.graph.vertex_count() << " "
                      << inst.graph.edge_count() << "\n";
        return 0;
    }
    throw std::runtime_error("kernel needs strategy vc, cyclomatic, or treedepth");
}

int cmd_generate(const std::string& family, int a, int b, uint32_t seed) {
    Graph g = [&] {
        if (family == "complete") return make_complete(a);
        if (family == "bipartite") return make_complete_bipartite(a, b);
        if (family == "path") return make_path(a);
        if (family == "cycle") return make_cycle(a);
        if (family == "theta") return make_theta(a, b);
        if (family == "gnm") return make_random_gnm(a, b, seed);
        if (family == "tree") return make_random_tree(a, seed);
        if (family == "cograph") return make_cograph_from_random_cotree(a, seed);
        if (family == "cover") return make_random_with_cover(a, b, seed);
        if (family == "cyclo") return make_random_with_cyclomatic(a, b, seed);
        throw std::runtime_error("unknown family '" + family + "'");
    }();
    std::cout << emit_graph(g);
    return 0;
}

int cmd_echo(const std::string& input) {
    std::cout << emit_graph(load_graph(input));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-planarity decision tool"};
    app.require_subcommand(1);

    std::string input = "-", constraints, witness_path, strategy = "auto";
    RunConfig cfg;
    int gen_a = 0, gen_b = 0;
    std::string family;

    CLI::App* decide = app.add_subcommand("decide", "decide 1-planarity");
    decide->add_option("--input", input, "graph file ('-' for stdin)");
    decide->add_option("--constraints", constraints, "constraints file");
    decide->add_option("--strategy", strategy,
                       "auto|exact|vc|treedepth|cyclomatic|cograph");
    decide->add_option("--budget", cfg.budget, "search-node budget");
    decide->add_option("--c1", cfg.c1, "tree-depth rejection constant");
    decide->add_flag("--paranoid,--no-td-reject", cfg.paranoid,
                     "skip the tree-depth counting rejection");
    decide->add_option("--seed", cfg.seed, "seed (recorded, not used)");
    decide->add_option("--workers", cfg.workers, "worker count");
    decide->add_flag("--witness", cfg.want_witness, "emit the crossing pairs");
    decide->add_flag("--timing", cfg.timing, "report wall time");
    std::string output = "text";
    decide->add_option("--output", output, "text|record");

    CLI::App* verify = app.add_subcommand("verify", "check a witness");
    verify->add_option("--input", input, "graph file");
    verify->add_option("--witness-file", witness_path, "witness file")->required();
    verify->add_option("--constraints", constraints, "constraints file");

    CLI::App* kernel = app.add_subcommand("kernel", "emit a kernel and plan");
    kernel->add_option("--input", input, "graph file");
    kernel->add_option("--strategy", strategy, "vc|treedepth|cyclomatic")->required();

    CLI::App* generate = app.add_subcommand("generate", "emit a fixture graph");
    generate->add_option("--family", family, "graph family")->required();
    generate->add_option("--a", gen_a, "first parameter");
    generate->add_option("--b", gen_b, "second parameter");
    generate->add_option("--seed", cfg.seed, "random seed");

    CLI::App* echo = app.add_subcommand("echo", "parse and re-emit a graph");
    echo->add_option("--input", input, "graph file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) {
            cfg.strategy = parse_strategy(strategy);
            if (output == "record")
                cfg.output = OutputFormat::record;
            else if (output != "text")
                throw std::runtime_error("unknown output format '" + output + "'");
            return cmd_decide(input, constraints, cfg);
        }
        if (verify->parsed()) return cmd_verify(input, witness_path, constraints);
        if (kernel->parsed()) return cmd_kernel(input, strategy);
        if (generate->parsed()) return cmd_generate(family, gen_a, gen_b, cfg.seed);
        if (echo->parsed()) return cmd_echo(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
