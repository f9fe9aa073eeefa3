// Command line front end: distances, matrices, tree ingestion and the
// random-pair benchmark harness.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "editdist/dendrogram.hpp"
#include "editdist/distance.hpp"
#include "editdist/ingest.hpp"
#include "editdist/tree_mapping.hpp"

namespace fs = std::filesystem;
using namespace editdist;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << text << "\n";
}

Dendrogram load_tree(const std::string& path) {
    std::string text = read_file(path);
    // Newick convenience: anything that does not look like JSON
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return Dendrogram::from_json(text);
        break;
    }
    return Dendrogram::from_newick(text);
}

void dump_problems(const Dendrogram& a, const Dendrogram& b, const DistanceTable& table,
                   const std::string& dir) {
    fs::create_directories(dir);
    Dendrogram t = a.normalized();
    Dendrogram u = b.normalized();
    for (const auto& x : t.vertices()) {
        Dendrogram tx = t.subtree(x);
        if (tx.edge_count() == 0) continue;
        for (const auto& y : u.vertices()) {
            Dendrogram uy = u.subtree(y);
            if (uy.edge_count() == 0) continue;
            BlpProblem p = build_problem(tx, uy, table);
            std::ofstream out(fs::path(dir) / ("problem_" + x + "_" + y + ".lp"));
            write_lp(p, out);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edit distances between weighted trees"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = auto, 1 = serial)");

    std::string out_path;
    app.add_option("-o,--out", out_path, "write output to a file instead of stdout");

    // dist
    auto* dist = app.add_subcommand("dist", "distance between two trees (JSON or Newick)");
    std::string dist_a, dist_b, dump_dir;
    dist->add_option("a", dist_a, "first tree")->required();
    dist->add_option("b", dist_b, "second tree")->required();
    dist->add_option("--dump-lp", dump_dir, "write every subproblem as an LP file into DIR");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "pairwise distances of all trees in a directory");
    std::string matrix_dir;
    matrix->add_option("dir", matrix_dir, "directory with *.json trees")->required();

    // mergetree
    auto* mergetree = app.add_subcommand("mergetree", "merge tree from sampled-function CSV");
    std::string mergetree_csv;
    mergetree->add_option("samples", mergetree_csv, "CSV with x,y rows")->required();

    // linkage
    auto* linkage = app.add_subcommand("linkage", "single-linkage dendrogram from points CSV");
    std::string linkage_csv;
    linkage->add_option("points", linkage_csv, "CSV with one point per row")->required();

    // random
    auto* random_cmd = app.add_subcommand("random", "random single-linkage dendrogram");
    int random_leaves = 5;
    std::uint64_t random_seed = 0;
    random_cmd->add_option("--leaves", random_leaves, "number of leaves")->required();
    random_cmd->add_option("--seed", random_seed, "RNG seed")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "random-pair benchmark, CSV output");
    int n_min = 5, n_max = 10, trials = 10;
    bool parallel = false;
    bench->add_option("--n-min", n_min, "smallest leaf count");
    bench->add_option("--n-max", n_max, "largest leaf count");
    bench->add_option("--trials", trials, "pairs per leaf count");
    bench->add_flag("--parallel", parallel, "run pairs concurrently");

    // validate-mapping
    auto* vm = app.add_subcommand("validate-mapping", "check a mapping JSON against two trees");
    std::string vm_a, vm_b, vm_m;
    vm->add_option("a", vm_a, "first tree")->required();
    vm->add_option("b", vm_b, "second tree")->required();
    vm->add_option("mapping", vm_m, "mapping JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        ComputeOptions opts;
        opts.threads = threads;

        if (*dist) {
            Dendrogram a = load_tree(dist_a);
            Dendrogram b = load_tree(dist_b);
            auto [d, table] = compute_distance(a, b, opts);
            if (!dump_dir.empty()) dump_problems(a, b, table, dump_dir);
            nlohmann::json j;
            j["distance"] = d;
            emit(j.dump(2), out_path);
        } else if (*matrix) {
            std::vector<std::string> files;
            for (const auto& entry : fs::directory_iterator(matrix_dir))
                if (entry.path().extension() == ".json") files.push_back(entry.path().string());
            std::sort(files.begin(), files.end());
            if (files.empty()) throw Error("no *.json trees in " + matrix_dir);
            std::vector<Dendrogram> trees;
            for (const auto& f : files) trees.push_back(Dendrogram::from_json(read_file(f)));
            auto m = distance_matrix(trees, opts);
            nlohmann::json j;
            j["files"] = files;
            j["matrix"] = m;
            emit(j.dump(2), out_path);
        } else if (*mergetree) {
            std::ifstream in(mergetree_csv);
            if (!in) throw Error("cannot open " + mergetree_csv);
            SampledFunction f = samples_from_csv(in);
            emit(merge_tree_from_samples(f).to_json(), out_path);
        } else if (*linkage) {
            std::ifstream in(linkage_csv);
            if (!in) throw Error("cannot open " + linkage_csv);
            auto points = points_from_csv(in);
            emit(single_linkage_from_points(points).to_json(), out_path);
        } else if (*random_cmd) {
            emit(random_dendrogram(random_leaves, random_seed).to_json(), out_path);
        } else if (*bench) {
            auto records = run_benchmark(n_min, n_max, trials, parallel);
            std::ostringstream csv;
            write_benchmark_csv(records, csv);
            std::string text = csv.str();
            if (!text.empty() && text.back() == '\n') text.pop_back();
            emit(text, out_path);
        } else if (*vm) {
            Dendrogram a = load_tree(vm_a);
            Dendrogram b = load_tree(vm_b);
            TreeMapping m = TreeMapping::from_json(read_file(vm_m));
            MappingReport report = validate_tree_mapping(a, b, m);
            nlohmann::json j;
            j["ok"] = report.ok;
            j["violations"] = report.violations;
            if (report.ok) j["cost"] = tree_mapping_cost(a, b, m);
            emit(j.dump(2), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
