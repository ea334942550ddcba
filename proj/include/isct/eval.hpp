#pragma once

#include <vector>

#include "isct/types.hpp"

namespace isct {

// Cross-tabulation of two labelings over the same items. Label values may be
// arbitrary integers; rows/columns are indexed densely in ascending label
// order.
struct ContingencyTable {
    std::vector<std::vector<std::size_t>> counts; // pred clusters x truth classes
    std::vector<std::size_t> row_marginals;
    std::vector<std::size_t> col_marginals;
    std::size_t total = 0;
};

ContingencyTable contingency(const std::vector<int>& pred, const std::vector<int>& truth);

// Fraction of items sitting in the majority class of their predicted cluster.
double purity(const std::vector<int>& pred, const std::vector<int>& truth);

// Mutual information normalized by the arithmetic mean of the two label
// entropies (natural log). Both labelings constant -> 1.0; exactly one
// constant -> 0.0.
double nmi(const std::vector<int>& pred, const std::vector<int>& truth);

// Pair-counting F1 over all unordered item pairs: a true positive is a pair
// co-clustered in both labelings. Precision or recall with a zero denominator
// counts as 0; when neither labeling co-clusters any pair the score is 1.
double pairwise_f1(const std::vector<int>& pred, const std::vector<int>& truth);

} // namespace isct
