#include "isct/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isct/seqcore.hpp"

namespace isct {

namespace {

// Node-local view of a clustering: keep only the labels of the given rows and
// renumber the clusters that still have members, ascending.
Clustering restrict_and_compact(const Clustering& full, const std::vector<std::size_t>& indices) {
    std::set<int> present;
    for (std::size_t i : indices) present.insert(full.labels[i]);
    std::map<int, int> remap;
    int next = 0;
    for (int l : present) remap[l] = next++;
    Clustering out;
    out.k = present.size();
    out.labels.reserve(indices.size());
    for (std::size_t i : indices) out.labels.push_back(remap[full.labels[i]]);
    return out;
}

} // namespace

IsctTree build_isct(const SequenceDatabase& db, const TreeConfig& config, Rng& rng,
                    const std::optional<Clustering>& initial) {
    if (config.k < 1) throw Error("k must be at least 1");
    if (config.k > db.size()) throw Error("k exceeds the number of sequences");
    if (config.min_split < 1) throw Error("min_split must be at least 1");
    if (initial && initial->labels.size() != db.size())
        throw Error("initial clustering does not match the database");

    MiningConfig mining = config.mining;
    if (mining.max_pattern_len == 0)
        mining.max_pattern_len = resolve_max_random_len(config.projection, db);

    IsctTree tree;
    tree.alphabet = db.alphabet_ptr();
    tree.k_requested = config.k;

    // Without boost every node reads from one shared initial clustering; with
    // boost each node re-clusters its own sequences, so the initial pass would
    // never be read and is skipped unless pinned by the caller.
    std::optional<Clustering> shared = initial;
    if (!shared && !config.boost && config.k >= 2)
        shared = random_projection_clustering(db, config.k, config.projection, rng);

    std::vector<std::size_t> indices(db.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;

    std::unique_ptr<IsctNode>* slot = &tree.root;
    std::size_t k_n = config.k;
    std::uint64_t node_tag = 0;
    int next_leaf_id = 0;

    while (true) {
        auto owned = std::make_unique<IsctNode>();
        IsctNode* node = owned.get();
        *slot = std::move(owned);
        node->member_indices = indices;
        node->size = indices.size();
        ++node_tag;

        const auto make_leaf = [&] {
            node->kind = IsctNode::Kind::leaf;
            node->cluster_id = next_leaf_id++;
            ++tree.leaf_count;
        };

        if (k_n < 2 || indices.size() <= std::min(k_n, config.min_split)) {
            make_leaf();
            break;
        }

        const SequenceDatabase node_db = db.subset(indices);
        Clustering working;
        if (config.boost) {
            const std::size_t k_eff = std::min(k_n, node_db.size());
            Rng node_rng(rng.fork_seed(node_tag));
            working = random_projection_clustering(node_db, k_eff, config.projection, node_rng);
        } else {
            working = restrict_and_compact(*shared, indices);
        }
        if (working.k < 2) {
            make_leaf();
            break;
        }

        // Candidate pool: union of each working cluster's most frequent patterns.
        std::set<std::vector<item_id>> seen;
        std::vector<Pattern> candidates;
        std::vector<std::size_t> rows;
        for (std::size_t cl = 0; cl < working.k; ++cl) {
            rows.clear();
            for (std::size_t r = 0; r < node_db.size(); ++r)
                if (working.labels[r] == static_cast<int>(cl)) rows.push_back(r);
            if (rows.empty()) continue;
            const SequenceDatabase cluster_db = node_db.subset(rows);
            for (auto& p : mine_top_frequent(cluster_db, mining))
                if (seen.insert(p.items).second) candidates.push_back(std::move(p));
        }

        const std::optional<ScoredPattern> best = top1_discriminative(candidates, node_db, working);
        if (!best) {
            make_leaf();
            break;
        }

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : indices)
            (contains(db[i], best->pattern) ? right_idx : left_idx).push_back(i);

        node->kind = IsctNode::Kind::internal;
        node->pattern = best->pattern;
        tree.patterns_used.push_back(best->pattern);

        auto right = std::make_unique<IsctNode>();
        right->kind = IsctNode::Kind::leaf;
        right->cluster_id = next_leaf_id++;
        right->member_indices = std::move(right_idx);
        right->size = right->member_indices.size();
        node->right = std::move(right);
        ++tree.leaf_count;

        slot = &node->left;
        indices = std::move(left_idx);
        k_n -= 1;
    }
    return tree;
}

int assign(const IsctTree& tree, const Sequence& s) {
    const IsctNode* n = tree.root.get();
    if (!n) throw Error("cannot assign with an empty tree");
    while (!n->is_leaf()) n = contains(s, n->pattern) ? n->right.get() : n->left.get();
    return n->cluster_id;
}

std::pair<IsctTree, Clustering> fit_predict(const SequenceDatabase& db, const TreeConfig& config,
                                            Rng& rng) {
    IsctTree tree = build_isct(db, config, rng);
    Clustering c;
    c.k = tree.leaf_count;
    c.labels.assign(db.size(), 0);
    std::vector<const IsctNode*> stack{tree.root.get()};
    while (!stack.empty()) {
        const IsctNode* n = stack.back();
        stack.pop_back();
        if (n->is_leaf()) {
            for (std::size_t i : n->member_indices) c.labels[i] = n->cluster_id;
        } else {
            stack.push_back(n->left.get());
            stack.push_back(n->right.get());
        }
    }
    return {std::move(tree), std::move(c)};
}

namespace {

std::string pattern_text(const Pattern& p, const Alphabet& a) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += a.symbol(p.items[i]);
    }
    return out;
}

nlohmann::ordered_json node_to_json(const IsctNode& n, const Alphabet& a) {
    nlohmann::ordered_json j;
    if (n.is_leaf()) {
        j["kind"] = "leaf";
        j["cluster_id"] = n.cluster_id;
        j["size"] = n.size;
        return j;
    }
    j["kind"] = "internal";
    auto items = nlohmann::ordered_json::array();
    for (item_id id : n.pattern.items) items.push_back(a.symbol(id));
    j["pattern"] = std::move(items);
    j["size"] = n.size;
    j["left"] = node_to_json(*n.left, a);
    j["right"] = node_to_json(*n.right, a);
    return j;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void node_to_dot(const IsctNode& n, const Alphabet& a, std::size_t& counter, std::ostringstream& nodes,
                 std::ostringstream& edges, std::size_t id) {
    if (n.is_leaf()) {
        nodes << "  n" << id << " [label=\"cluster " << n.cluster_id << " (n=" << n.size
              << ")\"];\n";
        return;
    }
    nodes << "  n" << id << " [label=\"contains <" << dot_escape(pattern_text(n.pattern, a))
          << ">?\"];\n";
    const std::size_t rid = ++counter;
    node_to_dot(*n.right, a, counter, nodes, edges, rid);
    edges << "  n" << id << " -> n" << rid << " [label=\"yes\"];\n";
    const std::size_t lid = ++counter;
    node_to_dot(*n.left, a, counter, nodes, edges, lid);
    edges << "  n" << id << " -> n" << lid << " [label=\"no\"];\n";
}

std::unique_ptr<IsctNode> node_from_json(const nlohmann::json& j, Alphabet& a,
                                         std::vector<Pattern>& patterns, std::size_t& leaves) {
    auto node = std::make_unique<IsctNode>();
    const std::string kind = j.at("kind").get<std::string>();
    node->size = j.at("size").get<std::size_t>();
    if (kind == "leaf") {
        node->kind = IsctNode::Kind::leaf;
        node->cluster_id = j.at("cluster_id").get<int>();
        ++leaves;
        return node;
    }
    if (kind != "internal") throw Error("tree JSON: unknown node kind '" + kind + "'");
    node->kind = IsctNode::Kind::internal;
    const auto& items = j.at("pattern");
    if (!items.is_array() || items.empty())
        throw Error("tree JSON: internal node needs a nonempty pattern");
    for (const auto& it : items) node->pattern.items.push_back(a.intern(it.get<std::string>()));
    patterns.push_back(node->pattern);
    node->left = node_from_json(j.at("left"), a, patterns, leaves);
    node->right = node_from_json(j.at("right"), a, patterns, leaves);
    return node;
}

} // namespace

std::string export_tree(const IsctTree& tree, TreeFormat format, const Alphabet& alphabet) {
    if (!tree.root) throw Error("cannot export an empty tree");
    if (format == TreeFormat::json) {
        nlohmann::ordered_json j;
        j["format"] = "isct-tree-v1";
        j["k_requested"] = tree.k_requested;
        j["leaf_count"] = tree.leaf_count;
        j["root"] = node_to_json(*tree.root, alphabet);
        return j.dump(2) + "\n";
    }
    std::ostringstream nodes, edges;
    std::size_t counter = 0;
    node_to_dot(*tree.root, alphabet, counter, nodes, edges, 0);
    std::ostringstream out;
    out << "digraph isct {\n  node [shape=box];\n" << nodes.str() << edges.str() << "}\n";
    return out.str();
}

IsctTree import_tree(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("tree JSON parse failed: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "isct-tree-v1")
            throw Error("tree JSON: unsupported format tag");
        IsctTree tree;
        auto alphabet = std::make_shared<Alphabet>();
        tree.k_requested = j.at("k_requested").get<std::size_t>();
        std::size_t leaves = 0;
        tree.root = node_from_json(j.at("root"), *alphabet, tree.patterns_used, leaves);
        tree.leaf_count = j.at("leaf_count").get<std::size_t>();
        if (tree.leaf_count != leaves) throw Error("tree JSON: leaf_count does not match tree");
        tree.alphabet = std::move(alphabet);
        return tree;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("tree JSON is missing or mistypes a field: ") + e.what());
    }
}

namespace {

void render_node(const IsctNode& n, const Alphabet& a, std::size_t depth, std::ostringstream& out) {
    if (n.is_leaf()) {
        out << "cluster " << n.cluster_id << " (n=" << n.size << ")\n";
        return;
    }
    const std::string pad(depth * 2, ' ');
    out << "contains <" << pattern_text(n.pattern, a) << ">?\n";
    out << pad << "  yes: ";
    render_node(*n.right, a, depth + 1, out);
    out << pad << "  no: ";
    render_node(*n.left, a, depth + 1, out);
}

} // namespace

std::string render_tree_text(const IsctTree& tree, const Alphabet& alphabet) {
    if (!tree.root) throw Error("cannot render an empty tree");
    std::ostringstream out;
    render_node(*tree.root, alphabet, 0, out);
    return out.str();
}

} // namespace isct
