#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "isct/synth.hpp"

namespace isct {

struct RunConfig {
    std::string input_path;
    std::string input_format = "tokens"; // tokens | spmf
    std::string labels_path;
    std::size_t k = 2;
    std::uint64_t seed = 0;
    bool boost = true;
    std::size_t num_patterns = 2048;
    std::size_t max_pattern_len = 0; // maxS; 0 = auto rule
    std::size_t top_frequent = 512;
    std::size_t min_split = 5;
    std::string out_assignments;
    std::string out_tree;
    std::string out_dot;
    std::string out_metrics;
};

// Fit a tree on the input and write the requested artifacts. Metrics are only
// written when ground-truth labels are supplied. Returns a process exit
// status; failures print one diagnostic line to err.
int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Render a previously exported tree JSON as indented text or DOT on out.
int cmd_explain(const std::string& tree_json_path, const std::string& format, std::ostream& out,
                std::ostream& err);

// Score an assignments file against a labels file; metrics JSON goes to out.
int cmd_eval(const std::string& assignments_path, const std::string& labels_path,
             const std::string& out_metrics, std::ostream& out, std::ostream& err);

struct SynthPaths {
    std::string out_tokens;
    std::string out_labels; // empty = out_tokens + ".labels"
};

int cmd_synth(const SynthConfig& cfg, const SynthPaths& paths, std::ostream& err);

} // namespace isct
