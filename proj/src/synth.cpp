#include "isct/synth.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "isct/rng.hpp"

namespace isct {

namespace {

std::string symbol_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "x" + std::to_string(i);
}

} // namespace

SynthData synth_planted(const SynthConfig& cfg) {
    if (cfg.k < 2) throw Error("synth needs k >= 2");
    if (cfg.per_cluster < 1) throw Error("synth needs at least one sequence per cluster");

    const std::size_t sig_len = 3;
    std::size_t sig_items; // items reserved for signatures, rest is background
    if (cfg.overlap_pool == 0) {
        sig_items = sig_len * cfg.k;
    } else {
        if (cfg.overlap_pool < sig_len) throw Error("overlap_pool must be at least 3");
        sig_items = cfg.overlap_pool;
    }
    if (cfg.alphabet_size < sig_items + 1)
        throw Error("alphabet too small for " + std::to_string(cfg.k) +
                    " signatures plus a background symbol");

    auto alphabet = std::make_shared<Alphabet>();
    for (std::size_t i = 0; i < cfg.alphabet_size; ++i) alphabet->intern(symbol_name(i));

    Rng rng(cfg.seed);
    SynthData out{SequenceDatabase(alphabet, {Sequence{{0}}}), {}, {}};

    // Signatures first, so sequence generation consumes the stream in a fixed
    // order regardless of overlap mode.
    if (cfg.overlap_pool == 0) {
        for (std::size_t c = 0; c < cfg.k; ++c) {
            Pattern sig;
            for (std::size_t j = 0; j < sig_len; ++j)
                sig.items.push_back(static_cast<item_id>(sig_len * c + j));
            out.signatures.push_back(std::move(sig));
        }
    } else {
        std::set<std::vector<item_id>> seen;
        const std::size_t budget = 1000 * cfg.k;
        std::size_t draws = 0;
        while (out.signatures.size() < cfg.k) {
            if (++draws > budget)
                throw Error("overlap_pool too small to host k distinct signatures");
            Pattern sig;
            while (sig.items.size() < sig_len) {
                const auto cand = static_cast<item_id>(rng.uniform_below(sig_items));
                if (std::find(sig.items.begin(), sig.items.end(), cand) == sig.items.end())
                    sig.items.push_back(cand);
            }
            if (seen.insert(sig.items).second) out.signatures.push_back(std::move(sig));
        }
    }

    const std::size_t total_len = cfg.noise_len + sig_len;
    const std::size_t bg_count = cfg.alphabet_size - sig_items;
    std::vector<Sequence> sequences;
    sequences.reserve(cfg.k * cfg.per_cluster);
    for (std::size_t c = 0; c < cfg.k; ++c) {
        for (std::size_t s = 0; s < cfg.per_cluster; ++s) {
            // Three distinct slots for the signature, everything else noise.
            std::set<std::size_t> slots;
            while (slots.size() < sig_len)
                slots.insert(static_cast<std::size_t>(rng.uniform_below(total_len)));
            Sequence seq;
            seq.items.reserve(total_len);
            std::size_t next_sig = 0;
            for (std::size_t pos = 0; pos < total_len; ++pos) {
                if (slots.count(pos)) {
                    seq.items.push_back(out.signatures[c].items[next_sig++]);
                } else {
                    seq.items.push_back(
                        static_cast<item_id>(sig_items + rng.uniform_below(bg_count)));
                }
            }
            sequences.push_back(std::move(seq));
            out.labels.push_back(static_cast<int>(c));
        }
    }
    out.db = SequenceDatabase(alphabet, std::move(sequences));
    return out;
}

} // namespace isct
