#pragma once

#include <span>
#include <vector>

#include "isct/types.hpp"

namespace isct {

// Subsequence containment, decided by a single greedy left-to-right scan:
// advance through s and match pattern items in order. Greedy matching is
// exact for plain (gap-allowed) subsequence containment.
bool contains(std::span<const item_id> s, std::span<const item_id> pattern);

inline bool contains(const Sequence& s, const Pattern& p) {
    return contains(s.span(), p.span());
}

// Length of the longest common subsequence of a and b.
std::size_t lcs_length(std::span<const item_id> a, std::span<const item_id> b);

inline std::size_t lcs_length(const Sequence& a, const Sequence& b) {
    return lcs_length(a.span(), b.span());
}

// Indices of the sequences that contain p, ascending.
std::vector<std::size_t> matching_indices(const Pattern& p, const SequenceDatabase& db);

// Number of sequences containing p (sequence-level counting: one sequence
// counts once no matter how many embeddings it has).
std::size_t occurrences(const Pattern& p, const SequenceDatabase& db);

// Fraction of sequences containing p. The database constructor guarantees a
// nonzero denominator.
double support(const Pattern& p, const SequenceDatabase& db);

} // namespace isct
