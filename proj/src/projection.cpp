#include "isct/projection.hpp"

#include <set>

#include "isct/kernels.hpp"
#include "isct/pca.hpp"
#include "isct/seqcore.hpp"

namespace isct {

std::size_t resolve_max_random_len(const ProjectionConfig& config, const SequenceDatabase& db) {
    if (config.max_random_len > 0) return config.max_random_len;
    const std::size_t shortest = db.min_sequence_length();
    return shortest >= 10 ? 5 : shortest;
}

std::vector<Pattern> generate_random_patterns(const Alphabet& alphabet,
                                              const ProjectionConfig& config,
                                              std::size_t max_random_len, Rng& rng) {
    if (alphabet.size() == 0) throw Error("cannot draw patterns from an empty alphabet");
    if (max_random_len == 0) throw Error("max_random_len must be at least 1");

    std::vector<Pattern> out;
    out.reserve(config.num_patterns);
    std::set<std::vector<item_id>> seen;
    const std::size_t budget = 10 * config.num_patterns;
    std::size_t draws = 0;
    while (out.size() < config.num_patterns) {
        Pattern p;
        const std::size_t len =
            1 + static_cast<std::size_t>(rng.uniform_below(static_cast<std::uint64_t>(max_random_len)));
        p.items.reserve(len);
        for (std::size_t i = 0; i < len; ++i)
            p.items.push_back(static_cast<item_id>(
                rng.uniform_below(static_cast<std::uint64_t>(alphabet.size()))));
        ++draws;
        if (seen.insert(p.items).second || draws >= budget) out.push_back(std::move(p));
    }
    return out;
}

Matrix lcs_transform(const SequenceDatabase& db, const std::vector<Pattern>& patterns) {
    if (patterns.empty()) throw Error("lcs_transform requires at least one pattern");
    const std::size_t n = db.size(), d = patterns.size();
    Matrix x(n, d);
    std::array<std::int32_t, 8> lcs{};
    for (std::size_t j0 = 0; j0 < d; j0 += 8) {
        const std::size_t count = std::min<std::size_t>(8, d - j0);
        const kernels::Block8 block = kernels::pack_block8(patterns, j0, count);
        for (std::size_t i = 0; i < n; ++i) {
            kernels::lcs_block8(db[i].span(), block, lcs.data());
            auto row = x.row(i);
            for (std::size_t c = 0; c < count; ++c)
                row[j0 + c] = static_cast<double>(lcs[c]) /
                              static_cast<double>(patterns[j0 + c].size());
        }
    }
    return x;
}

Matrix pca_reduce(const Matrix& x, std::size_t target_dims) {
    return pca_project(x, target_dims).scores;
}

Clustering kmeans_cluster(const Matrix& x, std::size_t k, const ProjectionConfig& config,
                          Rng& rng) {
    KMeansConfig kc;
    kc.k = k;
    kc.restarts = config.kmeans_restarts;
    kc.max_iters = config.kmeans_max_iters;
    kc.tol = config.kmeans_tol;
    const KMeansResult r = kmeans(x, kc, rng.next_u64());
    return Clustering{r.labels, k};
}

Clustering random_projection_clustering(const SequenceDatabase& db, std::size_t k,
                                        const ProjectionConfig& config, Rng& rng) {
    if (k < 1) throw Error("k must be at least 1");
    if (db.size() < k) throw Error("k exceeds the number of sequences");
    const std::size_t max_len = resolve_max_random_len(config, db);
    const std::vector<Pattern> patterns =
        generate_random_patterns(db.alphabet(), config, max_len, rng);
    const Matrix features = lcs_transform(db, patterns);
    const std::size_t dims = config.pca_dims > 0 ? config.pca_dims : k;
    const Matrix reduced = pca_reduce(features, dims);
    return kmeans_cluster(reduced, k, config, rng);
}

} // namespace isct
