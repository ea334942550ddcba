#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace isct {

// Dense item id assigned at intern time. -1 marks a token unknown to the
// alphabet; unknown ids never match anything.
using item_id = std::int32_t;
inline constexpr item_id kUnknownItem = -1;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bidirectional symbol <-> dense id map. Ids are assigned in first-appearance
// order and never change once handed out.
class Alphabet {
public:
    item_id intern(const std::string& symbol) {
        auto it = index_.find(symbol);
        if (it != index_.end()) return it->second;
        const item_id id = static_cast<item_id>(symbols_.size());
        symbols_.push_back(symbol);
        index_.emplace(symbol, id);
        return id;
    }

    std::optional<item_id> lookup(const std::string& symbol) const {
        auto it = index_.find(symbol);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& symbol(item_id id) const { return symbols_.at(static_cast<size_t>(id)); }
    std::size_t size() const { return symbols_.size(); }
    const std::vector<std::string>& symbols() const { return symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, item_id> index_;
};

struct Sequence {
    std::vector<item_id> items;

    std::size_t size() const { return items.size(); }
    bool empty() const { return items.empty(); }
    std::span<const item_id> span() const { return items; }

    bool operator==(const Sequence& other) const = default;
};

// An ordered list of items used both as a random projection axis and as a
// tree split test. Ordered lexicographically by item id.
struct Pattern {
    std::vector<item_id> items;

    std::size_t size() const { return items.size(); }
    bool empty() const { return items.empty(); }
    std::span<const item_id> span() const { return items; }

    bool operator==(const Pattern& other) const = default;
    auto operator<=>(const Pattern& other) const { return items <=> other.items; }
};

class SequenceDatabase {
public:
    SequenceDatabase(std::shared_ptr<const Alphabet> alphabet,
                     std::vector<Sequence> sequences,
                     std::optional<std::vector<std::string>> source_ids = std::nullopt)
        : alphabet_(std::move(alphabet)),
          sequences_(std::move(sequences)),
          source_ids_(std::move(source_ids)) {
        if (!alphabet_) throw Error("sequence database requires an alphabet");
        if (sequences_.empty()) throw Error("sequence database must hold at least one sequence");
        for (const auto& s : sequences_) {
            if (s.empty()) throw Error("empty sequences are rejected at load");
            for (item_id id : s.items)
                if (id < 0 || id >= static_cast<item_id>(alphabet_->size()))
                    throw Error("sequence references item id outside the alphabet");
        }
    }

    const Alphabet& alphabet() const { return *alphabet_; }
    std::shared_ptr<const Alphabet> alphabet_ptr() const { return alphabet_; }
    const std::vector<Sequence>& sequences() const { return sequences_; }
    const Sequence& operator[](std::size_t i) const { return sequences_[i]; }
    std::size_t size() const { return sequences_.size(); }
    const std::optional<std::vector<std::string>>& source_ids() const { return source_ids_; }

    // New database holding copies of the selected sequences, same alphabet.
    SequenceDatabase subset(std::span<const std::size_t> indices) const {
        std::vector<Sequence> picked;
        picked.reserve(indices.size());
        for (std::size_t i : indices) picked.push_back(sequences_.at(i));
        return SequenceDatabase(alphabet_, std::move(picked));
    }

    std::size_t min_sequence_length() const {
        std::size_t m = sequences_.front().size();
        for (const auto& s : sequences_)
            if (s.size() < m) m = s.size();
        return m;
    }

private:
    std::shared_ptr<const Alphabet> alphabet_;
    std::vector<Sequence> sequences_;
    std::optional<std::vector<std::string>> source_ids_;
};

} // namespace isct
