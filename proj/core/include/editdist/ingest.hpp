#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "editdist/dendrogram.hpp"
#include "editdist/distance.hpp"

namespace editdist {

struct SampledFunction {
    std::vector<double> xs;  // strictly increasing
    std::vector<double> ys;

    void validate() const;
};

// Merge tree of the sublevel filtration of a sampled function: a union-find
// sweep over the samples in ascending value (ties in x order). Leaves sit at
// the local minima, internal vertices at the merges; the chain above the last
// merge (the edge to infinity) is truncated.
Dendrogram merge_tree_from_samples(const SampledFunction& f);

// Single linkage over an explicit distance matrix (symmetric, nonnegative,
// positive off the diagonal) or a Euclidean point cloud. Leaves at height 0;
// equal-height merges collapse into one k-ary vertex.
Dendrogram single_linkage_dendrogram(const std::vector<std::vector<double>>& distance_matrix);
Dendrogram single_linkage_from_points(const std::vector<std::vector<double>>& points);

// n uniform points on the unit interval, single-linkage dendrogram; fixed
// seed gives an identical tree.
Dendrogram random_dendrogram(int leaves, std::uint64_t seed);

struct BenchmarkRecord {
    int leaves = 0;
    int trial = 0;
    double build_seconds = 0.0;
    double solve_seconds = 0.0;
    double total_seconds = 0.0;
};

// For each n in [n_min, n_max]: `trials` random pairs, timing problem
// assembly, solving and the whole distance computation.
std::vector<BenchmarkRecord> run_benchmark(int n_min, int n_max, int trials, bool parallel);

void write_benchmark_csv(const std::vector<BenchmarkRecord>& records, std::ostream& os);

// CSV inputs: samples as "x,y" rows; points as one comma-separated row per
// point. A non-numeric first row is treated as a header.
SampledFunction samples_from_csv(std::istream& in);
std::vector<std::vector<double>> points_from_csv(std::istream& in);

}  // namespace editdist
