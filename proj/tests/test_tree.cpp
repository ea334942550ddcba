#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "isct/seqcore.hpp"
#include "isct/tree.hpp"
#include "oracles.hpp"

using isct::Clustering;
using isct::IsctNode;
using isct::IsctTree;
using isct::Pattern;
using isct::TreeConfig;
using isct::item_id;

namespace {

TreeConfig toy_config(std::size_t k, bool boost) {
    TreeConfig cfg;
    cfg.k = k;
    cfg.boost = boost;
    cfg.min_split = 1; // the toy database is tiny
    cfg.mining.max_patterns_per_cluster = 256;
    cfg.projection.num_patterns = 256;
    return cfg;
}

void collect_leaves(const IsctNode* node, std::vector<const IsctNode*>& out) {
    if (!node) return;
    if (node->is_leaf()) {
        out.push_back(node);
        return;
    }
    collect_leaves(node->left.get(), out);
    collect_leaves(node->right.get(), out);
}

// Chain shape: every internal node's right child is a leaf, lefts descend.
bool is_right_leaning_chain(const IsctNode* node) {
    while (node && !node->is_leaf()) {
        if (!node->right || !node->right->is_leaf()) return false;
        if (!node->left) return false;
        node = node->left.get();
    }
    return node != nullptr;
}

} // namespace

TEST_CASE("pinned initial clustering reproduces the worked example") {
    const auto toy = oracle::toy_database(); // a=0 b=1 d=2 c=3 e=4
    auto cfg = toy_config(3, false);
    // Six top-support patterns per cluster keeps each pool to the short
    // candidates: {a,b,d,ab,ad,bd}, {a,d,c,e,aa,ad}, {a,b,c,aa,ab,ac}.
    cfg.mining.max_patterns_per_cluster = 6;
    isct::Rng rng(1);
    const auto tree = isct::build_isct(toy.db, cfg, rng, Clustering{toy.labels, 3});

    CHECK(tree.leaf_count == 3);
    REQUIRE(tree.patterns_used.size() == 2);

    // <b d> is the only candidate with infinite relative risk at the root; it
    // isolates cluster {s1, s2}.
    CHECK(tree.patterns_used[0].items == std::vector<item_id>{1, 2});

    REQUIRE(tree.root);
    REQUIRE(!tree.root->is_leaf());
    const auto* right = tree.root->right.get();
    REQUIRE(right);
    CHECK(right->is_leaf());
    CHECK(right->cluster_id == 0);
    CHECK(right->member_indices == std::vector<std::size_t>{0, 1});

    // Second split: <a b> and <a d> tie at rr = inf, sim = 4/15, support 1,
    // length 2; <a b> wins lexicographically and separates {s5, s6}.
    CHECK(tree.patterns_used[1].items == std::vector<item_id>{0, 1});
    const auto* second = tree.root->left.get();
    REQUIRE(second);
    REQUIRE(!second->is_leaf());
    CHECK(second->right->cluster_id == 1);
    CHECK(second->right->member_indices == std::vector<std::size_t>{4, 5});
    CHECK(second->left->is_leaf());
    CHECK(second->left->cluster_id == 2);
    CHECK(second->left->member_indices == std::vector<std::size_t>{2, 3});
}

TEST_CASE("tree has k leaves, k-1 patterns, chain shape on clean splits") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, false);
    isct::Rng rng(2);
    const auto tree = isct::build_isct(toy.db, cfg, rng, Clustering{toy.labels, 3});
    CHECK(is_right_leaning_chain(tree.root.get()));
    std::vector<const IsctNode*> leaves;
    collect_leaves(tree.root.get(), leaves);
    CHECK(leaves.size() == 3);
    CHECK(tree.patterns_used.size() == 2);

    // Leaf ids are assigned in construction order and cover 0..k-1.
    std::set<int> ids;
    for (const auto* leaf : leaves) ids.insert(leaf->cluster_id);
    CHECK(ids == std::set<int>{0, 1, 2});
}

TEST_CASE("leaves partition the database") {
    const auto toy = oracle::toy_database();
    for (bool boost : {false, true}) {
        auto cfg = toy_config(3, boost);
        isct::Rng rng(3);
        const auto tree = isct::build_isct(toy.db, cfg, rng);
        std::vector<const IsctNode*> leaves;
        collect_leaves(tree.root.get(), leaves);
        std::vector<std::size_t> all;
        for (const auto* leaf : leaves) {
            CHECK(leaf->size == leaf->member_indices.size());
            all.insert(all.end(), leaf->member_indices.begin(), leaf->member_indices.end());
        }
        std::sort(all.begin(), all.end());
        std::vector<std::size_t> expect(toy.db.size());
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = i;
        CHECK(all == expect);
    }
}

TEST_CASE("assign routes every fit sequence to its own leaf") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, true);
    isct::Rng rng(4);
    const auto [tree, clustering] = isct::fit_predict(toy.db, cfg, rng);
    REQUIRE(clustering.labels.size() == toy.db.size());
    for (std::size_t i = 0; i < toy.db.size(); ++i)
        CHECK(isct::assign(tree, toy.db[i]) == clustering.labels[i]);
}

TEST_CASE("fit_predict labels match leaf membership") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(2, true);
    isct::Rng rng(5);
    const auto [tree, clustering] = isct::fit_predict(toy.db, cfg, rng);
    std::vector<const IsctNode*> leaves;
    collect_leaves(tree.root.get(), leaves);
    for (const auto* leaf : leaves)
        for (std::size_t row : leaf->member_indices)
            CHECK(clustering.labels[row] == leaf->cluster_id);
}

TEST_CASE("k of 1 yields a single leaf and no patterns") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(1, true);
    isct::Rng rng(6);
    const auto tree = isct::build_isct(toy.db, cfg, rng);
    REQUIRE(tree.root);
    CHECK(tree.root->is_leaf());
    CHECK(tree.root->cluster_id == 0);
    CHECK(tree.leaf_count == 1);
    CHECK(tree.patterns_used.empty());
    CHECK(tree.root->size == toy.db.size());
}

TEST_CASE("min_split stops splitting small nodes") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, true);
    // The stop rule is |D| <= min(k, min_split): with k=3 that bound is 3,
    // so six sequences still split.
    cfg.min_split = 10;
    isct::Rng rng(7);
    const auto tree = isct::build_isct(toy.db, cfg, rng);
    CHECK(tree.leaf_count >= 2);

    // With k = 6 every sequence could be isolated, but min(6, 10) = 6 >= |D|,
    // so the root is a leaf.
    auto cfg6 = toy_config(6, true);
    cfg6.min_split = 10;
    isct::Rng rng2(8);
    const auto stub = isct::build_isct(toy.db, cfg6, rng2);
    REQUIRE(stub.root);
    CHECK(stub.root->is_leaf());
    CHECK(stub.leaf_count == 1);
}

TEST_CASE("build validates its inputs") {
    const auto toy = oracle::toy_database();
    isct::Rng rng(9);
    auto cfg = toy_config(0, true);
    CHECK_THROWS_AS(isct::build_isct(toy.db, cfg, rng), isct::Error);
    cfg = toy_config(7, true); // k > |D|
    CHECK_THROWS_AS(isct::build_isct(toy.db, cfg, rng), isct::Error);
    cfg = toy_config(2, true);
    cfg.min_split = 0;
    CHECK_THROWS_AS(isct::build_isct(toy.db, cfg, rng), isct::Error);
    cfg = toy_config(2, false);
    CHECK_THROWS_AS(isct::build_isct(toy.db, cfg, rng, Clustering{{0, 1}, 2}), isct::Error);
}

TEST_CASE("same seed gives an identical tree, different seeds may differ") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, true);
    isct::Rng r1(10), r2(10);
    const auto a = isct::build_isct(toy.db, cfg, r1);
    const auto b = isct::build_isct(toy.db, cfg, r2);
    const auto ja = isct::export_tree(a, isct::TreeFormat::json, toy.db.alphabet());
    const auto jb = isct::export_tree(b, isct::TreeFormat::json, toy.db.alphabet());
    CHECK(ja == jb);
}

TEST_CASE("json export round-trips byte for byte") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, false);
    isct::Rng rng(11);
    const auto tree = isct::build_isct(toy.db, cfg, rng, Clustering{toy.labels, 3});
    const auto text = isct::export_tree(tree, isct::TreeFormat::json, toy.db.alphabet());
    const auto back = isct::import_tree(text);
    CHECK(back.k_requested == tree.k_requested);
    CHECK(back.leaf_count == tree.leaf_count);
    REQUIRE(back.patterns_used.size() == tree.patterns_used.size());
    const auto again = isct::export_tree(back, isct::TreeFormat::json, *back.alphabet);
    CHECK(again == text);
}

TEST_CASE("imported tree assigns like the original") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, false);
    isct::Rng rng(12);
    const auto tree = isct::build_isct(toy.db, cfg, rng, Clustering{toy.labels, 3});
    const auto text = isct::export_tree(tree, isct::TreeFormat::json, toy.db.alphabet());
    const auto back = isct::import_tree(text);

    // Route the original token sequences through the imported tree: the
    // imported alphabet is rebuilt from pattern strings, so re-intern.
    for (std::size_t i = 0; i < toy.db.size(); ++i) {
        isct::Sequence s;
        for (item_id it : toy.db[i].items) {
            const auto sym = toy.db.alphabet().symbol(it);
            s.items.push_back(back.alphabet->lookup(sym).value_or(isct::kUnknownItem));
        }
        CHECK(isct::assign(back, s) == isct::assign(tree, toy.db[i]));
    }
}

TEST_CASE("import rejects malformed documents") {
    CHECK_THROWS_AS(isct::import_tree("not json"), isct::Error);
    CHECK_THROWS_AS(isct::import_tree("{}"), isct::Error);
    CHECK_THROWS_AS(isct::import_tree(R"({"format":"other","k_requested":1,"leaf_count":1,)"
                                      R"("root":{"kind":"leaf","cluster_id":0,"size":1}})"),
                    isct::Error);
    CHECK_THROWS_AS(isct::import_tree(R"({"format":"isct-tree-v1","k_requested":2,)"
                                      R"("leaf_count":2,"root":{"kind":"internal",)"
                                      R"("pattern":[],"size":2,)"
                                      R"("left":{"kind":"leaf","cluster_id":1,"size":1},)"
                                      R"("right":{"kind":"leaf","cluster_id":0,"size":1}}})"),
                    isct::Error);
    CHECK_THROWS_AS(isct::import_tree(R"({"format":"isct-tree-v1","k_requested":1,)"
                                      R"("leaf_count":5,"root":{"kind":"leaf",)"
                                      R"("cluster_id":0,"size":1}})"),
                    isct::Error);
}

TEST_CASE("dot export names clusters and asks containment questions") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, false);
    cfg.mining.max_patterns_per_cluster = 6;
    isct::Rng rng(13);
    const auto tree = isct::build_isct(toy.db, cfg, rng, Clustering{toy.labels, 3});
    const auto dot = isct::export_tree(tree, isct::TreeFormat::dot, toy.db.alphabet());
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("contains <b d>?") != std::string::npos);
    CHECK(dot.find("contains <a b>?") != std::string::npos);
    CHECK(dot.find("cluster 0 (n=2)") != std::string::npos);
    CHECK(dot.find("cluster 1 (n=2)") != std::string::npos);
    CHECK(dot.find("cluster 2 (n=2)") != std::string::npos);
    CHECK(dot.find("[label=\"yes\"]") != std::string::npos);
    CHECK(dot.find("[label=\"no\"]") != std::string::npos);
}

TEST_CASE("text rendering shows the questions and leaves") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, false);
    cfg.mining.max_patterns_per_cluster = 6;
    isct::Rng rng(14);
    const auto tree = isct::build_isct(toy.db, cfg, rng, Clustering{toy.labels, 3});
    const auto text = isct::render_tree_text(tree, toy.db.alphabet());
    CHECK(text.find("contains <b d>?") != std::string::npos);
    CHECK(text.find("yes:") != std::string::npos);
    CHECK(text.find("no:") != std::string::npos);
    CHECK(text.find("cluster 0") != std::string::npos);
    CHECK(text.find("cluster 2") != std::string::npos);
}

TEST_CASE("assign on sequences with unknown items falls to the no side") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, false);
    isct::Rng rng(15);
    const auto tree = isct::build_isct(toy.db, cfg, rng, Clustering{toy.labels, 3});
    isct::Sequence stranger;
    stranger.items = {isct::kUnknownItem, isct::kUnknownItem};
    const int leaf = isct::assign(tree, stranger);
    // No pattern can match, so the walk ends at the leftmost leaf.
    const IsctNode* node = tree.root.get();
    while (!node->is_leaf()) node = node->left.get();
    CHECK(leaf == node->cluster_id);
}

TEST_CASE("boost re-clusters each node and still produces k leaves here") {
    const auto toy = oracle::toy_database();
    auto cfg = toy_config(3, true);
    isct::Rng rng(16);
    const auto tree = isct::build_isct(toy.db, cfg, rng);
    CHECK(tree.leaf_count >= 1);
    CHECK(tree.leaf_count <= 3);
    CHECK(tree.k_requested == 3);
    std::vector<const IsctNode*> leaves;
    collect_leaves(tree.root.get(), leaves);
    CHECK(leaves.size() == tree.leaf_count);
    CHECK(tree.patterns_used.size() == tree.leaf_count - 1);
}

TEST_CASE("non-boost mode compacts the surviving initial labels at each node") {
    // Initial labels contain three clusters; the pattern splitting off cluster
    // 0 also captures one cluster-1 member, so the remainder must re-index
    // cleanly and still finish with the right leaf count.
    auto alphabet = std::make_shared<isct::Alphabet>();
    for (const char* s : {"a", "b", "c", "d", "e", "f"}) alphabet->intern(s);
    const auto seq = [&](std::initializer_list<int> xs) {
        isct::Sequence s;
        for (int x : xs) s.items.push_back(item_id(x));
        return s;
    };
    std::vector<isct::Sequence> rows{
        seq({0, 1, 0, 1}), seq({1, 0, 1, 0}),      // cluster 0: a/b
        seq({2, 3, 2, 3}), seq({3, 2, 3, 2}),      // cluster 1: c/d
        seq({4, 5, 4, 5}), seq({5, 4, 5, 4}),      // cluster 2: e/f
    };
    isct::SequenceDatabase db(alphabet, std::move(rows));
    TreeConfig cfg;
    cfg.k = 3;
    cfg.boost = false;
    cfg.min_split = 1;
    cfg.mining.max_patterns_per_cluster = 128;
    cfg.projection.num_patterns = 128;
    isct::Rng rng(17);
    const auto tree = isct::build_isct(db, cfg, rng, Clustering{{0, 0, 1, 1, 2, 2}, 3});
    CHECK(tree.leaf_count == 3);
    std::vector<const IsctNode*> leaves;
    collect_leaves(tree.root.get(), leaves);
    std::vector<std::size_t> all;
    for (const auto* leaf : leaves)
        all.insert(all.end(), leaf->member_indices.begin(), leaf->member_indices.end());
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
}
