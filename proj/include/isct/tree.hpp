#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isct/patterns.hpp"
#include "isct/projection.hpp"
#include "isct/types.hpp"

namespace isct {

struct TreeConfig {
    std::size_t k = 2;
    bool boost = true;
    std::size_t min_split = 5; // a node with at most min(k_n, min_split) sequences stays a leaf
    MiningConfig mining;
    ProjectionConfig projection;
    std::uint64_t seed = 0;
};

struct IsctNode {
    enum class Kind { internal, leaf };
    Kind kind = Kind::leaf;
    Pattern pattern;                 // internal nodes only
    std::unique_ptr<IsctNode> left;  // sequences not containing pattern
    std::unique_ptr<IsctNode> right; // sequences containing pattern
    int cluster_id = -1;             // leaves only
    std::vector<std::size_t> member_indices; // original database rows seen at fit time
    std::size_t size = 0;

    bool is_leaf() const { return kind == Kind::leaf; }
};

struct IsctTree {
    std::unique_ptr<IsctNode> root;
    std::size_t k_requested = 0;
    std::size_t leaf_count = 0;
    std::vector<Pattern> patterns_used; // one per internal node, construction order
    std::shared_ptr<const Alphabet> alphabet;
};

// Builds the clustering tree: an initial clustering drives a chain of splits,
// each isolating one cluster behind a top-1 discriminative pattern (right
// child = leaf of sequences containing it), with the remainder recursing on
// k-1. A node becomes a leaf when fewer than 2 clusters remain to split off,
// when it holds at most min(k_n, min_split) sequences, or when no pattern
// induces a two-sided split. Leaf cluster ids count up in construction order.
// With boost, every split re-clusters its own sequences from scratch;
// without it, the initial labels restricted to the node are used. `initial`
// pins the initial clustering instead of running random projection.
IsctTree build_isct(const SequenceDatabase& db, const TreeConfig& config, Rng& rng,
                    const std::optional<Clustering>& initial = std::nullopt);

// Leaf id reached by routing s from the root (right on containment). Items
// unknown to the tree's alphabet never match any pattern.
int assign(const IsctTree& tree, const Sequence& s);

// build_isct plus the per-sequence labels its leaves recorded.
std::pair<IsctTree, Clustering> fit_predict(const SequenceDatabase& db, const TreeConfig& config,
                                            Rng& rng);

enum class TreeFormat { json, dot };

// JSON export round-trips byte-identically through import_tree; DOT labels
// internal nodes "contains <...>?" with yes/no edges.
std::string export_tree(const IsctTree& tree, TreeFormat format, const Alphabet& alphabet);

// Rebuilds a tree (fresh alphabet, no fit-time membership) from export_tree's
// JSON. Throws Error on malformed input.
IsctTree import_tree(const std::string& text);

// Indented plain-text rendering used by the explain command.
std::string render_tree_text(const IsctTree& tree, const Alphabet& alphabet);

} // namespace isct
