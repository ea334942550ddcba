#include <iostream>

#include <CLI11.hpp>

#include "isct/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Interpretable sequence clustering tree"};
    app.require_subcommand(1);

    isct::RunConfig run;
    CLI::App* cluster = app.add_subcommand("cluster", "Fit a clustering tree on a sequence file");
    cluster->add_option("--input", run.input_path, "Sequence file")->required();
    cluster->add_option("--format", run.input_format, "Input format: tokens|spmf")
        ->check(CLI::IsMember({"tokens", "spmf"}));
    cluster->add_option("--labels", run.labels_path, "Ground-truth labels (enables metrics)");
    cluster->add_option("--k", run.k, "Number of clusters")->required();
    cluster->add_option("--seed", run.seed, "Random seed");
    cluster->add_flag("--boost,!--no-boost", run.boost, "Re-cluster at every split (default on)");
    cluster->add_option("--num-patterns", run.num_patterns, "Random projection patterns");
    cluster->add_option("--max-pattern-len", run.max_pattern_len,
                        "Longest random/mined pattern (0 = auto rule)");
    cluster->add_option("--top-frequent", run.top_frequent, "Frequent patterns kept per cluster");
    cluster->add_option("--min-split", run.min_split, "Smallest node worth splitting");
    cluster->add_option("--out-assignments", run.out_assignments, "Write index<TAB>cluster lines");
    cluster->add_option("--out-tree", run.out_tree, "Write tree JSON");
    cluster->add_option("--out-dot", run.out_dot, "Write Graphviz DOT");
    cluster->add_option("--out-metrics", run.out_metrics, "Write metrics JSON (needs --labels)");

    std::string explain_tree, explain_format = "text";
    CLI::App* explain = app.add_subcommand("explain", "Render an exported tree");
    explain->add_option("--tree", explain_tree, "Tree JSON file")->required();
    explain->add_option("--render", explain_format, "Rendering: text|dot")
        ->check(CLI::IsMember({"text", "dot"}));

    std::string eval_assignments, eval_labels, eval_out;
    CLI::App* eval = app.add_subcommand("eval", "Score assignments against ground truth");
    eval->add_option("--assignments", eval_assignments, "Assignments file")->required();
    eval->add_option("--labels", eval_labels, "Ground-truth labels")->required();
    eval->add_option("--out-metrics", eval_out, "Write metrics JSON here instead of stdout");

    isct::SynthConfig synth_cfg;
    isct::SynthPaths synth_paths;
    CLI::App* synth = app.add_subcommand("synth", "Generate a planted-pattern dataset");
    synth->add_option("--k", synth_cfg.k, "Clusters to plant");
    synth->add_option("--per-cluster", synth_cfg.per_cluster, "Sequences per cluster");
    synth->add_option("--alphabet-size", synth_cfg.alphabet_size, "Total symbols");
    synth->add_option("--noise-len", synth_cfg.noise_len, "Background items per sequence");
    synth->add_option("--seed", synth_cfg.seed, "Random seed");
    synth->add_option("--overlap-pool", synth_cfg.overlap_pool,
                      "Draw signatures from this many shared items (0 = disjoint)");
    synth->add_option("--out", synth_paths.out_tokens, "Tokens file to write")->required();
    synth->add_option("--out-labels", synth_paths.out_labels,
                      "Labels file to write (default: <out>.labels)");

    CLI11_PARSE(app, argc, argv);

    if (cluster->parsed()) return isct::cmd_cluster(run, std::cout, std::cerr);
    if (explain->parsed()) return isct::cmd_explain(explain_tree, explain_format, std::cout, std::cerr);
    if (eval->parsed()) return isct::cmd_eval(eval_assignments, eval_labels, eval_out, std::cout, std::cerr);
    if (synth->parsed()) return isct::cmd_synth(synth_cfg, synth_paths, std::cerr);
    return 1;
}
