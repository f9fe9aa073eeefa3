#include "editdist/ingest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace editdist {

void SampledFunction::validate() const {
    if (xs.size() != ys.size()) throw Error("sampled function: x/y size mismatch");
    if (xs.size() < 2) throw Error("sampled function: need at least 2 samples");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1])) throw Error("sampled function: x values must strictly increase");
    for (double v : ys)
        if (!std::isfinite(v)) throw Error("sampled function: values must be finite");
}

namespace {

// Shared scaffolding for the sweep constructions: leaves and merge vertices
// with heights, finalized into a dendrogram with height-difference weights.
class MergeForest {
  public:
    int new_leaf(std::string name, double height) {
        nodes_.push_back({std::move(name), height, {}, true, false});
        return static_cast<int>(nodes_.size()) - 1;
    }

    // Returns the representative after merging the clusters of a and b at
    // the given height. Equal-height internal vertices collapse (k-ary
    // merges); a leaf born exactly at the merge height is a plateau artifact
    // and dissolves.
    int merge(int a, int b, double height) {
        bool sp_a = spurious_leaf(a, height);
        bool sp_b = spurious_leaf(b, height);
        if (sp_a && sp_b) throw Error("merge forest: two leaves born at their merge height");
        if (sp_a) {
            nodes_[a].dead = true;
            return b;
        }
        if (sp_b) {
            nodes_[b].dead = true;
            return a;
        }
        bool flat_a = !nodes_[a].leaf && nodes_[a].height == height;
        bool flat_b = !nodes_[b].leaf && nodes_[b].height == height;
        if (flat_a && flat_b) {
            for (int c : nodes_[b].children) nodes_[a].children.push_back(c);
            nodes_[b].dead = true;
            return a;
        }
        if (flat_a) {
            nodes_[a].children.push_back(b);
            return a;
        }
        if (flat_b) {
            nodes_[b].children.push_back(a);
            return b;
        }
        nodes_.push_back({"", height, {a, b}, false, false});
        return static_cast<int>(nodes_.size()) - 1;
    }

    Dendrogram finalize(int root) const {
        if (nodes_.at(root).dead) throw Error("merge forest: dead root");
        int counter = 0;
        std::vector<std::string> names(nodes_.size());
        std::function<void(int)> assign = [&](int v) {
            names[v] = nodes_[v].leaf ? nodes_[v].name : "m" + std::to_string(counter++);
            for (int c : nodes_[v].children) assign(c);
        };
        assign(root);
        Dendrogram out(Space::reals(), names[root]);
        std::function<void(int)> emit = [&](int v) {
            for (int c : nodes_[v].children) {
                out.add_vertex(names[c], names[v], Weight::real(nodes_[v].height - nodes_[c].height));
                emit(c);
            }
        };
        emit(root);
        return out;
    }

  private:
    struct Node {
        std::string name;
        double height;
        std::vector<int> children;
        bool leaf;
        bool dead;
    };

    bool spurious_leaf(int v, double height) const {
        return nodes_[v].leaf && nodes_[v].height == height;
    }

    std::vector<Node> nodes_;
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Dendrogram merge_tree_from_samples(const SampledFunction& f) {
    f.validate();
    const std::size_t n = f.xs.size();

    // ascending value, ties in x order
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f.ys[a] < f.ys[b]; });

    MergeForest forest;
    UnionFind uf(n);
    std::vector<bool> processed(n, false);
    std::vector<int> rep(n, -1);  // representative forest node per component root

    for (std::size_t k : order) {
        double y = f.ys[k];
        bool left = k > 0 && processed[k - 1];
        bool right = k + 1 < n && processed[k + 1];
        processed[k] = true;
        if (!left && !right) {
            rep[k] = forest.new_leaf("s" + std::to_string(k), y);
            continue;
        }
        if (left && right) {
            int ra = uf.find(static_cast<int>(k) - 1);
            int rb = uf.find(static_cast<int>(k) + 1);
            if (ra != rb) {
                int merged = forest.merge(rep[ra], rep[rb], y);
                uf.unite(ra, rb);
                uf.unite(static_cast<int>(k), rb);
                rep[uf.find(static_cast<int>(k))] = merged;
                continue;
            }
        }
        int neighbour = left ? static_cast<int>(k) - 1 : static_cast<int>(k) + 1;
        int r = uf.find(neighbour);
        uf.unite(static_cast<int>(k), neighbour);
        rep[uf.find(static_cast<int>(k))] = rep[r];
    }

    int root = rep[uf.find(0)];
    return forest.finalize(root);
}

Dendrogram single_linkage_dendrogram(const std::vector<std::vector<double>>& distance_matrix) {
    const std::size_t n = distance_matrix.size();
    if (n == 0) throw Error("single linkage: need at least one point");
    for (const auto& row : distance_matrix)
        if (row.size() != n) throw Error("single linkage: matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(distance_matrix[i][j] >= 0.0))
                throw Error("single linkage: distances must be nonnegative");
            if (std::abs(distance_matrix[i][j] - distance_matrix[j][i]) > 0.0)
                throw Error("single linkage: matrix must be symmetric");
            if (i != j && distance_matrix[i][j] == 0.0)
                throw Error("single linkage: off-diagonal distances must be positive");
        }
    }

    MergeForest forest;
    UnionFind uf(n);
    std::vector<int> rep(n);
    for (std::size_t i = 0; i < n; ++i) rep[i] = forest.new_leaf("p" + std::to_string(i), 0.0);
    if (n == 1) return forest.finalize(rep[0]);

    struct Link {
        double d;
        std::size_t i, j;
    };
    std::vector<Link> links;
    links.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) links.push_back({distance_matrix[i][j], i, j});
    std::stable_sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
        if (a.d != b.d) return a.d < b.d;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });

    for (const auto& link : links) {
        int ra = uf.find(static_cast<int>(link.i));
        int rb = uf.find(static_cast<int>(link.j));
        if (ra == rb) continue;
        int merged = forest.merge(rep[ra], rep[rb], link.d);
        uf.unite(ra, rb);
        rep[uf.find(ra)] = merged;
    }
    return forest.finalize(rep[uf.find(0)]);
}

Dendrogram single_linkage_from_points(const std::vector<std::vector<double>>& points) {
    const std::size_t n = points.size();
    if (n == 0) throw Error("single linkage: need at least one point");
    const std::size_t dims = points[0].size();
    for (const auto& p : points)
        if (p.size() != dims) throw Error("single linkage: points must share a dimension");
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < dims; ++k) {
                double diff = points[i][k] - points[j][k];
                acc += diff * diff;
            }
            d[i][j] = d[j][i] = std::sqrt(acc);
        }
    }
    return single_linkage_dendrogram(d);
}

Dendrogram random_dendrogram(int leaves, std::uint64_t seed) {
    if (leaves < 1) throw Error("random_dendrogram: need at least one leaf");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<double>> points;
    points.reserve(static_cast<std::size_t>(leaves));
    for (int i = 0; i < leaves; ++i) points.push_back({unit(rng)});
    return single_linkage_from_points(points);
}

std::vector<BenchmarkRecord> run_benchmark(int n_min, int n_max, int trials, bool parallel) {
    if (n_min < 1 || n_max < n_min) throw Error("run_benchmark: bad leaf range");
    if (trials < 1) throw Error("run_benchmark: need at least one trial");

    struct Job {
        int n, trial;
    };
    std::vector<Job> jobs;
    for (int n = n_min; n <= n_max; ++n)
        for (int t = 0; t < trials; ++t) jobs.push_back({n, t});

    std::vector<BenchmarkRecord> records(jobs.size());
    auto run_one = [&](std::size_t k) {
        const Job& job = jobs[k];
        std::uint64_t base = (static_cast<std::uint64_t>(job.n) << 32) |
                             (static_cast<std::uint64_t>(job.trial) << 1);
        Dendrogram a = random_dendrogram(job.n, base);
        Dendrogram b = random_dendrogram(job.n, base | 1);
        ComputeOptions opts;
        opts.threads = 1;  // pair-level parallelism only, to keep timings clean
        ComputeStats stats;
        compute_distance(a, b, opts, &stats);
        records[k] = {job.n, job.trial, stats.build_seconds, stats.solve_seconds,
                      stats.wall_seconds};
    };

    if (!parallel) {
        for (std::size_t k = 0; k < jobs.size(); ++k) run_one(k);
        return records;
    }
    int workers = effective_threads(ComputeOptions{});
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                std::size_t k = next.fetch_add(1);
                if (k >= jobs.size()) break;
                run_one(k);
            }
        });
    }
    for (auto& th : pool) th.join();
    return records;
}

void write_benchmark_csv(const std::vector<BenchmarkRecord>& records, std::ostream& os) {
    os << "leaves,trial,build_seconds,solve_seconds,total_seconds\n";
    for (const auto& r : records)
        os << r.leaves << "," << r.trial << "," << r.build_seconds << "," << r.solve_seconds
           << "," << r.total_seconds << "\n";
}

namespace {

std::vector<std::vector<double>> numeric_rows(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        bool bad = false;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                row.push_back(v);
                (void)used;
            } catch (const std::exception&) {
                bad = true;
                break;
            }
        }
        if (bad) {
            if (first) {
                first = false;
                continue;  // header row
            }
            throw ParseError("CSV: non-numeric cell in row: " + line);
        }
        first = false;
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

SampledFunction samples_from_csv(std::istream& in) {
    SampledFunction f;
    for (const auto& row : numeric_rows(in)) {
        if (row.size() != 2) throw ParseError("samples CSV: expected x,y rows");
        f.xs.push_back(row[0]);
        f.ys.push_back(row[1]);
    }
    f.validate();
    return f;
}

std::vector<std::vector<double>> points_from_csv(std::istream& in) {
    std::vector<std::vector<double>> points = numeric_rows(in);
    if (points.empty()) throw ParseError("points CSV: no rows");
    return points;
}

}  // namespace editdist
