#pragma once

#include <cstdint>
#include <vector>

#include "isct/types.hpp"

namespace isct {

struct SynthConfig {
    std::size_t k = 3;
    std::size_t per_cluster = 10;
    std::size_t alphabet_size = 12;
    std::size_t noise_len = 10;
    std::uint64_t seed = 0;
    // 0: each cluster's 3-item signature uses its own disjoint items, so a
    // signature occurs in exactly its own cluster. >= 3: signatures are
    // distinct ordered triples over the first overlap_pool items instead,
    // which lets signature items (though not whole signatures) appear across
    // clusters.
    std::size_t overlap_pool = 0;
};

struct SynthData {
    SequenceDatabase db;
    std::vector<int> labels;         // ground cluster per sequence
    std::vector<Pattern> signatures; // one per cluster
};

// Planted-pattern generator: every sequence is its cluster's signature
// scattered (order kept) into noise_len background items, where background
// items never belong to any signature. Sequences come out cluster by cluster.
SynthData synth_planted(const SynthConfig& cfg);

} // namespace isct
