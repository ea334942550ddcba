#include "isct/patterns.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "isct/seqcore.hpp"

namespace isct {

namespace {

struct PoolEntry {
    std::size_t count;
    std::vector<item_id> items;
};

struct PoolOrder {
    bool operator()(const PoolEntry& a, const PoolEntry& b) const {
        if (a.count != b.count) return a.count > b.count;
        if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
        return a.items < b.items;
    }
};

// (sequence index, next search position) pairs for the current prefix's
// leftmost embeddings.
using Projection = std::vector<std::pair<std::size_t, std::size_t>>;

struct Miner {
    const SequenceDatabase& db;
    const MiningConfig& cfg;
    std::set<PoolEntry, PoolOrder> pool;
    std::vector<item_id> prefix;

    std::size_t threshold() const {
        return pool.size() == cfg.max_patterns_per_cluster ? std::prev(pool.end())->count : 0;
    }

    void offer(std::size_t count) {
        if (prefix.size() < cfg.min_pattern_len) return;
        PoolEntry e{count, prefix};
        if (pool.size() < cfg.max_patterns_per_cluster) {
            pool.insert(std::move(e));
            return;
        }
        auto worst = std::prev(pool.end());
        if (PoolOrder{}(e, *worst)) {
            pool.erase(worst);
            pool.insert(std::move(e));
        }
    }

    void dfs(const Projection& proj) {
        if (prefix.size() >= cfg.max_pattern_len) return;
        // Tally the items reachable from each sequence's frontier, keyed
        // ascending so exploration order is fixed.
        std::map<item_id, Projection> extensions;
        for (const auto& [si, pos] : proj) {
            const auto& items = db[si].items;
            std::set<item_id> seen;
            for (std::size_t j = pos; j < items.size(); ++j) {
                if (!seen.insert(items[j]).second) continue;
                extensions[items[j]].emplace_back(si, j + 1);
            }
        }
        for (auto& [item, next] : extensions) {
            const std::size_t count = next.size();
            if (count < threshold()) continue;
            prefix.push_back(item);
            offer(count);
            dfs(next);
            prefix.pop_back();
        }
    }
};

} // namespace

std::vector<Pattern> mine_top_frequent(const SequenceDatabase& cluster, const MiningConfig& config) {
    if (config.max_pattern_len == 0) throw Error("max_pattern_len must be resolved before mining");
    if (config.min_pattern_len > config.max_pattern_len)
        throw Error("min_pattern_len exceeds max_pattern_len");
    if (config.max_patterns_per_cluster == 0) return {};

    Miner miner{cluster, config, {}, {}};
    Projection root;
    root.reserve(cluster.size());
    for (std::size_t i = 0; i < cluster.size(); ++i) root.emplace_back(i, 0);
    miner.dfs(root);

    std::vector<Pattern> out;
    out.reserve(miner.pool.size());
    for (const auto& e : miner.pool) out.push_back(Pattern{e.items});
    return out;
}

ScoredPattern score_pattern(const Pattern& p, const SequenceDatabase& db, const Clustering& c) {
    if (c.labels.size() != db.size()) throw Error("clustering does not match the database");
    if (c.k < 2) throw Error("scoring needs at least 2 clusters");

    std::vector<std::size_t> size(c.k, 0), hits(c.k, 0), total_len(c.k, 0);
    for (std::size_t i = 0; i < db.size(); ++i) {
        const auto cl = static_cast<std::size_t>(c.labels[i]);
        ++size[cl];
        total_len[cl] += db[i].size();
        if (contains(db[i], p)) ++hits[cl];
    }
    std::size_t nonempty = 0;
    for (std::size_t cl = 0; cl < c.k; ++cl)
        if (size[cl] > 0) ++nonempty;
    if (nonempty < 2) throw Error("scoring needs at least 2 nonempty clusters");

    std::size_t pos = c.k;
    double best = -1.0;
    for (std::size_t cl = 0; cl < c.k; ++cl) {
        if (size[cl] == 0) continue;
        const double s = static_cast<double>(hits[cl]) / static_cast<double>(size[cl]);
        if (s > best) {
            best = s;
            pos = cl;
        }
    }

    ScoredPattern out;
    out.pattern = p;
    out.positive_cluster = static_cast<int>(pos);
    out.supp_pos = best;

    std::size_t neg_hits = 0, neg_size = 0;
    for (std::size_t cl = 0; cl < c.k; ++cl) {
        if (cl == pos) continue;
        neg_hits += hits[cl];
        neg_size += size[cl];
    }
    const double supp_neg = static_cast<double>(neg_hits) / static_cast<double>(neg_size);

    if (out.supp_pos == 0.0)
        out.rr = 0.0;
    else if (supp_neg == 0.0)
        out.rr = std::numeric_limits<double>::infinity();
    else
        out.rr = out.supp_pos / supp_neg;

    out.sim = static_cast<double>(p.size()) * static_cast<double>(size[pos]) /
              static_cast<double>(total_len[pos]);
    return out;
}

namespace {

bool score_better(const ScoredPattern& a, const ScoredPattern& b) {
    if (a.rr != b.rr) return a.rr > b.rr;
    if (a.sim != b.sim) return a.sim > b.sim;
    if (a.supp_pos != b.supp_pos) return a.supp_pos > b.supp_pos;
    if (a.pattern.size() != b.pattern.size()) return a.pattern.size() < b.pattern.size();
    return a.pattern.items < b.pattern.items;
}

} // namespace

std::optional<ScoredPattern> top1_discriminative(const std::vector<Pattern>& candidates,
                                                 const SequenceDatabase& db, const Clustering& c) {
    std::optional<ScoredPattern> best;
    for (const auto& p : candidates) {
        const std::size_t covered = occurrences(p, db);
        if (covered == 0 || covered == db.size()) continue; // split would be one-sided
        ScoredPattern s = score_pattern(p, db, c);
        if (!best || score_better(s, *best)) best = std::move(s);
    }
    return best;
}

} // namespace isct
