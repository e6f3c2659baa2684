// Command-line front end: solve / gen / bench / domset.
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromind/domset.hpp"
#include "chromind/graph.hpp"
#include "chromind/solver.hpp"

using namespace chromind;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string input;
    std::string mode = "auto";
    uint64_t seed = 1;
    int trials = 3;
    std::string domset = "auto";
    bool oracle_check = false;
    bool regular = false;
    std::string format = "json";
    int jobs = 1;
};

SolveMode parse_mode(const std::string& s) {
    if (s == "auto") return SolveMode::kAuto;
    if (s == "sieve") return SolveMode::kSieve;
    if (s == "ie") return SolveMode::kIE;
    if (s == "brute") return SolveMode::kBrute;
    throw CLI::ValidationError("mode", "unknown mode: " + s);
}

DomsetMethod parse_domset_method(const std::string& s) {
    if (s == "auto") return DomsetMethod::kAuto;
    if (s == "ore") return DomsetMethod::kOre;
    if (s == "structured") return DomsetMethod::kStructured;
    if (s == "exhaustive") return DomsetMethod::kExhaustive;
    throw CLI::ValidationError("domset", "unknown method: " + s);
}

SolverConfig solver_config(const RunConfig& rc) {
    SolverConfig cfg;
    cfg.mode = parse_mode(rc.mode);
    cfg.seed = rc.seed;
    cfg.trials = rc.trials;
    cfg.domset_method = parse_domset_method(rc.domset);
    cfg.jobs = rc.jobs;
    return cfg;
}

ordered_json verdict_json(const Verdict& v, const ParsedInstance& pi, bool regular,
                          int64_t wall_ms) {
    ordered_json j;
    j["problem"] = v.problem;
    if (v.problem == "edge-coloring") {
        j["verdict"] = v.cls == 1 ? "class1" : "class2";
        j["chromatic_index"] = v.chromatic_index;
        j["class"] = v.cls;
        j["delta"] = v.delta;
    } else {
        j["verdict"] = v.yes ? "YES" : "NO";
        j["k"] = pi.inst.k;
    }
    j["method"] = v.method;
    j["domset_method"] = v.domset_method;
    j["domset_size"] = v.domset_size;
    j["core_n"] = v.core_n;
    j["evaluations"] = v.evaluations;
    j["seed"] = v.seed;
    j["trials"] = v.trials;
    j["n"] = pi.inst.g.n;
    j["m"] = pi.inst.g.m();
    if (regular) j["alpha_d"] = v.alpha_d;
    j["wall_ms"] = wall_ms;
    return j;
}

Verdict run_solver(const ParsedInstance& pi, const RunConfig& rc) {
    const SolverConfig cfg = solver_config(rc);
    if (rc.regular) {
        if (pi.list_mode) throw ParseError("--regular applies to plain edge-coloring inputs");
        return edge_coloring_regular(pi.inst.g, cfg);
    }
    if (pi.list_mode) return list_edge_coloring(pi.inst, cfg);
    return edge_coloring(pi.inst.g, cfg);
}

void oracle_check_or_die(const ParsedInstance& pi, const Verdict& v) {
    if (pi.inst.g.m() > 16) {
        std::cerr << "oracle-check: instance above the brute-force cap; skipped\n";
        return;
    }
    if (pi.list_mode) {
        const bool expect = brute_force_list_colorable(pi.inst);
        if (expect != v.yes) throw std::logic_error("oracle-check: verdict mismatch");
    } else {
        const int chi = brute_force_chromatic_index(pi.inst.g);
        if (chi != v.chromatic_index)
            throw std::logic_error("oracle-check: chromatic index mismatch");
    }
}

int cmd_solve(const RunConfig& rc) {
    const ParsedInstance pi = parse_instance_file(rc.input);
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = run_solver(pi, rc);
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    if (rc.oracle_check) oracle_check_or_die(pi, v);
    if (rc.format == "json") {
        std::cout << verdict_json(v, pi, rc.regular, wall_ms).dump(2) << "\n";
    } else {
        if (v.problem == "edge-coloring")
            std::cout << rc.input << ": chi' = " << v.chromatic_index << " (class " << v.cls
                      << ", Delta = " << v.delta << ")";
        else
            std::cout << rc.input << ": " << (v.yes ? "YES" : "NO");
        std::cout << "  method=" << v.method << " evaluations=" << v.evaluations
                  << " seed=" << v.seed << " wall_ms=" << wall_ms << "\n";
    }
    return 0;
}

struct GenConfig {
    std::string family;
    int n = 6;
    int m = 8;
    int d = 3;
    int pendants = 3;
    int lists_k = 0;  // 0: plain edge-coloring instance
    uint64_t seed = 1;
    std::string out;
};

Graph gen_graph(const GenConfig& gc, SplitRng& rng) {
    if (gc.family == "cycle") return Graph::cycle(gc.n);
    if (gc.family == "complete") return Graph::complete(gc.n);
    if (gc.family == "random-gnm") return Graph::random_gnm(gc.n, gc.m, rng);
    if (gc.family == "random-regular") return Graph::random_regular(gc.n, gc.d, rng);
    if (gc.family == "pendant-augmented") {
        Graph g = Graph::random_gnm(gc.n, gc.m, rng);
        g.n += gc.pendants;
        for (int v = gc.n; v < g.n; ++v)
            g.add_edge(static_cast<int>(rng.next_below(static_cast<uint64_t>(v))), v);
        return g;
    }
    throw CLI::ValidationError("family", "unknown family: " + gc.family);
}

int cmd_gen(const GenConfig& gc) {
    SplitRng rng(gc.seed);
    const Graph g = gen_graph(gc, rng);
    ColoringInstance inst;
    const bool list_mode = gc.lists_k > 0;
    if (list_mode) {
        inst = ColoringInstance::with_full_lists(g, gc.lists_k);
        for (auto& mask : inst.lists)
            mask = 1 + rng.next_below((uint64_t{1} << gc.lists_k) - 1);
    } else {
        inst = ColoringInstance::edge_coloring(g);
    }
    std::ostringstream comment;
    comment << "gen " << gc.family << " n=" << gc.n;
    if (gc.family == "random-gnm" || gc.family == "pendant-augmented") comment << " m=" << gc.m;
    if (gc.family == "random-regular") comment << " d=" << gc.d;
    if (gc.family == "pendant-augmented") comment << " pendants=" << gc.pendants;
    if (list_mode) comment << " lists_k=" << gc.lists_k;
    comment << " seed=" << gc.seed;
    const std::string text = serialize_instance(inst, list_mode, comment.str());
    if (gc.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(gc.out);
        if (!f) throw ParseError("cannot open output file: " + gc.out);
        f << text;
    }
    return 0;
}

int cmd_bench(const std::string& suite_path, const std::string& csv_path, RunConfig rc) {
    std::ifstream suite(suite_path);
    if (!suite) throw ParseError("cannot open suite file: " + suite_path);
    std::ostringstream csv;
    csv << "instance,n,m,domset_size,vprime,evaluations,verdict,ms\n";
    std::vector<double> evals;
    std::string line;
    while (std::getline(suite, line)) {
        if (line.empty() || line[0] == '#') continue;
        rc.input = line;
        const ParsedInstance pi = parse_instance_file(line);
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict v = run_solver(pi, rc);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        const std::string verdict = v.problem == "edge-coloring"
                                        ? (v.cls == 1 ? "class1" : "class2")
                                        : (v.yes ? "YES" : "NO");
        csv << line << "," << pi.inst.g.n << "," << pi.inst.g.m() << "," << v.domset_size << ","
            << v.core_n - v.domset_size << "," << v.evaluations << "," << verdict << "," << ms
            << "\n";
        evals.push_back(static_cast<double>(v.evaluations));
    }
    if (csv_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(csv_path);
        if (!f) throw ParseError("cannot open output file: " + csv_path);
        f << csv.str();
    }
    std::cout << "# evaluation-count scaling ratios:";
    for (size_t i = 1; i < evals.size(); ++i) {
        if (evals[i - 1] > 0)
            std::cout << " " << std::fixed << std::setprecision(3) << evals[i] / evals[i - 1];
        else
            std::cout << " -";
    }
    std::cout << "\n";
    return 0;
}

int cmd_domset(const std::string& input, const std::string& method) {
    const ParsedInstance pi = parse_instance_file(input);
    const DomSetResult r = domset_for_solver(pi.inst.g, parse_domset_method(method));
    ordered_json j;
    j["size"] = r.size();
    ordered_json verts = ordered_json::array();
    for (int v : r.vertices) verts.push_back(v + 1);  // 1-indexed, matching the file format
    j["vertices"] = verts;
    j["method"] = r.method;
    j["certified_minimum"] = r.certified_minimum;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact edge-coloring and list-edge-coloring decision solver"};
    app.require_subcommand(1);

    RunConfig rc;
    CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("file", rc.input, "instance file")->required();
    solve->add_option("--mode", rc.mode, "auto|sieve|ie|brute");
    solve->add_option("--seed", rc.seed, "root random seed");
    solve->add_option("--trials", rc.trials, "sieve repetitions before NO");
    solve->add_option("--domset", rc.domset, "auto|ore|structured|exhaustive");
    solve->add_option("--jobs", rc.jobs, "worker threads for sieve subset loops");
    solve->add_option("--format", rc.format, "json|text");
    solve->add_flag("--oracle-check", rc.oracle_check, "re-solve by brute force and compare");
    solve->add_flag("--regular", rc.regular, "use the regular-graph pipeline");

    GenConfig gc;
    CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
    gen->add_option("family", gc.family,
                    "cycle|complete|random-gnm|random-regular|pendant-augmented")
        ->required();
    gen->add_option("-n", gc.n, "vertex count");
    gen->add_option("-m", gc.m, "edge count (gnm families)");
    gen->add_option("-d", gc.d, "degree (random-regular)");
    gen->add_option("--pendants", gc.pendants, "pendant vertices (pendant-augmented)");
    gen->add_option("--lists", gc.lists_k, "attach random lists over [k]");
    gen->add_option("--seed", gc.seed, "generator seed");
    gen->add_option("--out", gc.out, "output path (stdout if absent)");

    std::string suite_path, csv_path;
    CLI::App* bench = app.add_subcommand("bench", "Run a suite and emit CSV");
    bench->add_option("suite", suite_path, "file listing instance paths")->required();
    bench->add_option("--out", csv_path, "CSV output path (stdout if absent)");
    bench->add_option("--mode", rc.mode, "auto|sieve|ie|brute");
    bench->add_option("--seed", rc.seed, "root random seed");
    bench->add_option("--trials", rc.trials, "sieve repetitions before NO");
    bench->add_option("--domset", rc.domset, "auto|ore|structured|exhaustive");
    bench->add_option("--jobs", rc.jobs, "worker threads");

    std::string ds_input, ds_method = "auto";
    CLI::App* ds = app.add_subcommand("domset", "Compute a dominating set");
    ds->add_option("file", ds_input, "instance file")->required();
    ds->add_option("--method", ds_method, "auto|ore|structured|exhaustive");

    CLI11_PARSE(app, argc, argv);
    try {
        if (solve->parsed()) return cmd_solve(rc);
        if (gen->parsed()) return cmd_gen(gc);
        if (bench->parsed()) return cmd_bench(suite_path, csv_path, rc);
        if (ds->parsed()) return cmd_domset(ds_input, ds_method);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
