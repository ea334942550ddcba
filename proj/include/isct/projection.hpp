#pragma once

#include <cstdint>
#include <vector>

#include "isct/kmeans.hpp"
#include "isct/matrix.hpp"
#include "isct/rng.hpp"
#include "isct/types.hpp"

namespace isct {

struct ProjectionConfig {
    std::size_t num_patterns = 2048;
    // Longest random pattern. 0 means auto: 5 when every sequence has at
    // least 10 items, otherwise the shortest sequence length.
    std::size_t max_random_len = 0;
    std::size_t pca_dims = 0; // 0 means use k
    int kmeans_restarts = 10;
    int kmeans_max_iters = 300;
    double kmeans_tol = 1e-4;
    std::uint64_t seed = 0;
};

struct Clustering {
    std::vector<int> labels; // one per sequence, each in [0, k)
    std::size_t k = 0;
};

// Resolve the auto rule above against a concrete database.
std::size_t resolve_max_random_len(const ProjectionConfig& config, const SequenceDatabase& db);

// num_patterns random patterns: length uniform in {1..max_random_len}, items
// uniform with replacement. Duplicates are re-drawn within a budget of 10x
// num_patterns total draws, then kept (tiny alphabets exhaust the space).
std::vector<Pattern> generate_random_patterns(const Alphabet& alphabet,
                                              const ProjectionConfig& config,
                                              std::size_t max_random_len, Rng& rng);

// n x patterns matrix of normalized LCS similarity lcs(s, p)/|p|, each entry
// in [0,1] and exactly 1.0 iff s contains p.
Matrix lcs_transform(const SequenceDatabase& db, const std::vector<Pattern>& patterns);

// Mean-center and project onto the top principal components,
// min(target_dims, rows, cols) of them. See pca.hpp for the conventions.
Matrix pca_reduce(const Matrix& x, std::size_t target_dims);

// k-means over feature rows (see kmeans.hpp); empty-cluster repair guarantees
// k nonempty clusters. Throws when rows < k.
Clustering kmeans_cluster(const Matrix& x, std::size_t k, const ProjectionConfig& config, Rng& rng);

// The whole pipeline: random patterns -> LCS features -> PCA(k) -> k-means.
Clustering random_projection_clustering(const SequenceDatabase& db, std::size_t k,
                                        const ProjectionConfig& config, Rng& rng);

} // namespace isct
