#include <set>
#include <vector>

#include "doctest.h"
#include "isct/seqcore.hpp"
#include "isct/synth.hpp"

using isct::SynthConfig;

TEST_CASE("shapes and labels come out cluster by cluster") {
    SynthConfig cfg;
    cfg.k = 4;
    cfg.per_cluster = 6;
    cfg.alphabet_size = 20;
    cfg.noise_len = 8;
    cfg.seed = 1;
    const auto data = isct::synth_planted(cfg);
    CHECK(data.db.size() == 24);
    CHECK(data.labels.size() == 24);
    CHECK(data.signatures.size() == 4);
    for (std::size_t i = 0; i < 24; ++i) CHECK(data.labels[i] == int(i / 6));
    for (const auto& sig : data.signatures) CHECK(sig.size() == 3);
    for (std::size_t i = 0; i < 24; ++i) CHECK(data.db[i].size() == 3 + 8);
}

TEST_CASE("disjoint signatures occur in exactly their own cluster") {
    SynthConfig cfg;
    cfg.k = 3;
    cfg.per_cluster = 8;
    cfg.alphabet_size = 18;
    cfg.noise_len = 10;
    cfg.seed = 2;
    const auto data = isct::synth_planted(cfg);
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < data.db.size(); ++i) {
            const bool has = isct::contains(data.db[i].items, data.signatures[c].items);
            CHECK(has == (data.labels[i] == int(c)));
        }
    }
    // Signature item sets are pairwise disjoint.
    std::set<isct::item_id> seen;
    for (const auto& sig : data.signatures)
        for (auto it : sig.items) CHECK(seen.insert(it).second);
}

TEST_CASE("signature order is preserved inside each sequence") {
    SynthConfig cfg;
    cfg.k = 2;
    cfg.per_cluster = 5;
    cfg.alphabet_size = 10;
    cfg.noise_len = 12;
    cfg.seed = 3;
    const auto data = isct::synth_planted(cfg);
    for (std::size_t i = 0; i < data.db.size(); ++i) {
        const auto& sig = data.signatures[std::size_t(data.labels[i])];
        CHECK(isct::contains(data.db[i].items, sig.items));
    }
}

TEST_CASE("background items never borrow signature items in disjoint mode") {
    SynthConfig cfg;
    cfg.k = 3;
    cfg.per_cluster = 4;
    cfg.alphabet_size = 15;
    cfg.noise_len = 6;
    cfg.seed = 4;
    const auto data = isct::synth_planted(cfg);
    // First 9 ids are signature items; remove the three planted positions and
    // everything left must be a background id.
    for (std::size_t i = 0; i < data.db.size(); ++i) {
        std::size_t sig_items_seen = 0;
        for (auto it : data.db[i].items) {
            if (it < 9)
                ++sig_items_seen;
            else
                CHECK(it < isct::item_id(cfg.alphabet_size));
        }
        CHECK(sig_items_seen == 3);
    }
}

TEST_CASE("same seed reproduces the data, different seeds differ") {
    SynthConfig cfg;
    cfg.seed = 5;
    const auto a = isct::synth_planted(cfg);
    const auto b = isct::synth_planted(cfg);
    REQUIRE(a.db.size() == b.db.size());
    for (std::size_t i = 0; i < a.db.size(); ++i) CHECK(a.db[i].items == b.db[i].items);

    cfg.seed = 6;
    const auto c = isct::synth_planted(cfg);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.db.size() && !any_diff; ++i)
        any_diff = a.db[i].items != c.db[i].items;
    CHECK(any_diff);
}

TEST_CASE("overlap mode draws distinct triples from a shared pool") {
    SynthConfig cfg;
    cfg.k = 4;
    cfg.per_cluster = 3;
    cfg.alphabet_size = 16;
    cfg.noise_len = 9;
    cfg.overlap_pool = 5;
    cfg.seed = 7;
    const auto data = isct::synth_planted(cfg);
    std::set<std::vector<isct::item_id>> triples;
    for (const auto& sig : data.signatures) {
        CHECK(sig.size() == 3);
        std::set<isct::item_id> items(sig.items.begin(), sig.items.end());
        CHECK(items.size() == 3); // three distinct items
        for (auto it : sig.items) CHECK(it < 5);
        CHECK(triples.insert(sig.items).second); // signatures pairwise distinct
    }
    // Every sequence still contains its own signature.
    for (std::size_t i = 0; i < data.db.size(); ++i)
        CHECK(isct::contains(data.db[i].items, data.signatures[std::size_t(data.labels[i])].items));
}

TEST_CASE("configuration limits are enforced") {
    SynthConfig cfg;
    cfg.k = 1;
    CHECK_THROWS_AS(isct::synth_planted(cfg), isct::Error);
    cfg.k = 3;
    cfg.per_cluster = 0;
    CHECK_THROWS_AS(isct::synth_planted(cfg), isct::Error);
    cfg.per_cluster = 2;
    cfg.alphabet_size = 9; // needs 3*3 signature items plus at least one background
    CHECK_THROWS_AS(isct::synth_planted(cfg), isct::Error);
    cfg.alphabet_size = 10;
    CHECK_NOTHROW(isct::synth_planted(cfg));
    cfg.overlap_pool = 2; // a triple needs at least three distinct items
    CHECK_THROWS_AS(isct::synth_planted(cfg), isct::Error);
}

TEST_CASE("alphabet symbols are stable names") {
    SynthConfig cfg;
    cfg.k = 2;
    cfg.alphabet_size = 30;
    cfg.seed = 8;
    const auto data = isct::synth_planted(cfg);
    const auto& al = data.db.alphabet();
    CHECK(al.size() == 30);
    CHECK(al.symbol(0) == "a");
    CHECK(al.symbol(25) == "z");
    CHECK(al.symbol(26) == "x26");
}
