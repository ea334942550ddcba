#pragma once

#include <string>
#include <vector>

#include "isct/types.hpp"

namespace isct {

// Tokens format: one sequence per line, items are whitespace-separated
// tokens, blank lines skipped, alphabet interned in first-appearance order.
SequenceDatabase load_tokens(const std::string& path);

// Inverse emitter for the tokens format.
std::string format_tokens(const SequenceDatabase& db);

struct SpmfLoadResult {
    SequenceDatabase db;
    std::vector<std::string> warnings; // one per line whose itemsets were flattened
};

// SPMF sequence format: integer items, "-1" closes an itemset, "-2" ends the
// sequence. Itemsets are flattened into one totally ordered sequence and the
// integers become alphabet symbols by their decimal spelling. Multi-item
// itemsets flatten with a warning; malformed tokens and a missing terminator
// are errors.
SpmfLoadResult load_spmf(const std::string& path);

// One label token per non-blank line, aligned with the sequences by order.
std::vector<std::string> load_labels(const std::string& path);

// Whole-file atomic write (temp file in the same directory, then rename).
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace isct
