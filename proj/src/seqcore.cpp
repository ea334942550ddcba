#include "isct/seqcore.hpp"

#include <algorithm>

namespace isct {

bool contains(std::span<const item_id> s, std::span<const item_id> pattern) {
    if (pattern.empty()) return true;
    std::size_t next = 0;
    for (item_id x : s) {
        if (x == pattern[next]) {
            ++next;
            if (next == pattern.size()) return true;
        }
    }
    return false;
}

std::size_t lcs_length(std::span<const item_id> a, std::span<const item_id> b) {
    if (a.empty() || b.empty()) return 0;
    // Two-row DP; keep the shorter side as the row to bound memory.
    if (b.size() > a.size()) std::swap(a, b);
    std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::vector<std::size_t> matching_indices(const Pattern& p, const SequenceDatabase& db) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < db.size(); ++i)
        if (contains(db[i], p)) out.push_back(i);
    return out;
}

std::size_t occurrences(const Pattern& p, const SequenceDatabase& db) {
    std::size_t n = 0;
    for (const auto& s : db.sequences())
        if (contains(s, p)) ++n;
    return n;
}

double support(const Pattern& p, const SequenceDatabase& db) {
    return static_cast<double>(occurrences(p, db)) / static_cast<double>(db.size());
}

} // namespace isct
