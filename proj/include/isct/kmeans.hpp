#pragma once

#include <cstdint>
#include <vector>

#include "isct/matrix.hpp"
#include "isct/rng.hpp"

namespace isct {

struct KMeansConfig {
    std::size_t k = 2;
    int restarts = 10;
    int max_iters = 300;
    double tol = 1e-4; // max center movement (L2) that still counts as converged
};

struct KMeansResult {
    std::vector<int> labels; // one entry per row of x, in 0..k-1
    Matrix centers;          // k x dims
    double inertia = 0.0;    // sum of squared distances to assigned centers
    // Assignment-step inertia of the winning restart, one entry per Lloyd
    // iteration plus the final assignment. Never increases.
    std::vector<double> inertia_trace;
    int best_restart = 0;
    int iterations = 0;
};

// Lloyd's algorithm with k-means++ seeding and restarts. Each restart draws
// its stream from fork_seed(restart index), so runs are reproducible and the
// first r restarts are unaffected by raising the restart count. The restart
// with the lowest final inertia wins; ties keep the earlier restart. Requires
// 1 <= k <= rows.
KMeansResult kmeans(const Matrix& x, const KMeansConfig& cfg, std::uint64_t seed);

} // namespace isct
