#pragma once

#include <optional>
#include <vector>

#include "isct/projection.hpp"
#include "isct/types.hpp"

namespace isct {

struct MiningConfig {
    std::size_t max_patterns_per_cluster = 512;
    std::size_t max_pattern_len = 0; // 0 = caller resolves (tree uses the projection length rule)
    std::size_t min_pattern_len = 1;
};

struct ScoredPattern {
    Pattern pattern;
    double rr = 0.0; // +infinity when supp_neg is 0 and supp_pos is positive
    double sim = 0.0;
    double supp_pos = 0.0;
    int positive_cluster = 0;
};

// Up to max_patterns_per_cluster patterns with the highest supports in the
// cluster, lengths within [min_pattern_len, max_pattern_len], found by
// projected-database depth-first search. The admission threshold rises as
// the result pool fills; branches are cut only when strictly below it, since
// an equal-support pattern can still displace a pool member on the tie order.
// Result sorted by support descending, then shorter length, then items
// lexicographically.
std::vector<Pattern> mine_top_frequent(const SequenceDatabase& cluster, const MiningConfig& config);

// One-vs-rest scoring: the positive class is the cluster where p has maximal
// support (ties to the lower cluster id, empty clusters skipped), rr is the
// support ratio against everything else (+infinity when only the positive
// class contains p, 0 when nothing does), and sim weighs pattern length
// against the positive class's average sequence length.
ScoredPattern score_pattern(const Pattern& p, const SequenceDatabase& db, const Clustering& c);

// Scores all candidates and returns the best under (rr desc, sim desc,
// supp_pos desc, shorter, lexicographic items), skipping candidates contained
// in none or all of db (their split would be empty on one side). Absent when
// nothing remains.
std::optional<ScoredPattern> top1_discriminative(const std::vector<Pattern>& candidates,
                                                 const SequenceDatabase& db, const Clustering& c);

} // namespace isct
