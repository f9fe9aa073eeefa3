#pragma once

#include <cstddef>
#include <vector>

#include "editdist/blp.hpp"
#include "editdist/dendrogram.hpp"

namespace editdist {

struct ComputeOptions {
    // 0 = one worker per hardware thread (capped by EDITDIST_THREADS),
    // 1 = single-threaded, n = exactly n workers.
    int threads = 0;
};

struct ComputeStats {
    double build_seconds = 0.0;
    double solve_seconds = 0.0;
    double wall_seconds = 0.0;
    std::size_t problems = 0;
    std::size_t variables = 0;
};

int effective_threads(const ComputeOptions& options);

// Bottom-up subtree distance computation: normalizes both trees, then solves
// one BLP per vertex couple in level waves, filling the W table until the
// root couple gives d_E(T, T').
std::pair<double, DistanceTable> compute_distance(const Dendrogram& t, const Dendrogram& u,
                                                  const ComputeOptions& options = {},
                                                  ComputeStats* stats = nullptr);

// Pairwise distances; zero diagonal, symmetric by construction.
std::vector<std::vector<double>> distance_matrix(const std::vector<Dendrogram>& trees,
                                                 const ComputeOptions& options = {});

}  // namespace editdist
