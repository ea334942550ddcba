#include "isct/cli.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "isct/eval.hpp"
#include "isct/io.hpp"
#include "isct/tree.hpp"

namespace isct {

namespace {

std::vector<int> intern_labels(const std::vector<std::string>& raw) {
    std::map<std::string, int> ids;
    std::vector<int> out;
    out.reserve(raw.size());
    for (const auto& s : raw) {
        auto [it, fresh] = ids.emplace(s, static_cast<int>(ids.size()));
        (void)fresh;
        out.push_back(it->second);
    }
    return out;
}

std::string metrics_json(double purity_v, double nmi_v, double f1_v, std::size_t leaf_count,
                         std::size_t k_requested, std::uint64_t seed, std::uint64_t runtime_ms) {
    nlohmann::ordered_json j;
    j["purity"] = purity_v;
    j["nmi"] = nmi_v;
    j["f1"] = f1_v;
    j["leaf_count"] = leaf_count;
    j["k_requested"] = k_requested;
    j["seed"] = seed;
    j["runtime_ms"] = runtime_ms;
    return j.dump(2) + "\n";
}

} // namespace

int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.k < 1) throw Error("k must be at least 1");
        if (cfg.input_path.empty()) throw Error("no input file given");

        std::optional<SequenceDatabase> db;
        if (cfg.input_format == "tokens") {
            db = load_tokens(cfg.input_path);
        } else if (cfg.input_format == "spmf") {
            SpmfLoadResult r = load_spmf(cfg.input_path);
            for (const auto& w : r.warnings) err << "warning: " << w << "\n";
            db = std::move(r.db);
        } else {
            throw Error("unknown input format '" + cfg.input_format + "'");
        }

        TreeConfig tc;
        tc.k = cfg.k;
        tc.boost = cfg.boost;
        tc.min_split = cfg.min_split;
        tc.seed = cfg.seed;
        tc.mining.max_patterns_per_cluster = cfg.top_frequent;
        tc.projection.num_patterns = cfg.num_patterns;
        tc.projection.max_random_len = cfg.max_pattern_len;
        tc.projection.seed = cfg.seed;

        Rng rng(cfg.seed);
        const auto t0 = std::chrono::steady_clock::now();
        auto [tree, clustering] = fit_predict(*db, tc, rng);
        const auto t1 = std::chrono::steady_clock::now();
        const auto runtime_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());

        if (!cfg.out_assignments.empty()) {
            std::ostringstream lines;
            for (std::size_t i = 0; i < clustering.labels.size(); ++i)
                lines << i << '\t' << clustering.labels[i] << '\n';
            write_file_atomic(cfg.out_assignments, lines.str());
        }
        if (!cfg.out_tree.empty())
            write_file_atomic(cfg.out_tree, export_tree(tree, TreeFormat::json, db->alphabet()));
        if (!cfg.out_dot.empty())
            write_file_atomic(cfg.out_dot, export_tree(tree, TreeFormat::dot, db->alphabet()));

        if (!cfg.labels_path.empty()) {
            const std::vector<int> truth = intern_labels(load_labels(cfg.labels_path));
            if (truth.size() != db->size())
                throw Error("labels file has " + std::to_string(truth.size()) + " entries for " +
                            std::to_string(db->size()) + " sequences");
            const std::string text = metrics_json(
                purity(clustering.labels, truth), nmi(clustering.labels, truth),
                pairwise_f1(clustering.labels, truth), tree.leaf_count, tree.k_requested, cfg.seed,
                runtime_ms);
            if (!cfg.out_metrics.empty())
                write_file_atomic(cfg.out_metrics, text);
            else
                out << text;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_explain(const std::string& tree_json_path, const std::string& format, std::ostream& out,
                std::ostream& err) {
    try {
        const IsctTree tree = import_tree(read_file(tree_json_path));
        if (format == "text")
            out << render_tree_text(tree, *tree.alphabet);
        else if (format == "dot")
            out << export_tree(tree, TreeFormat::dot, *tree.alphabet);
        else
            throw Error("unknown explain format '" + format + "'");
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_eval(const std::string& assignments_path, const std::string& labels_path,
             const std::string& out_metrics, std::ostream& out, std::ostream& err) {
    try {
        const std::string text = read_file(assignments_path);
        std::istringstream in(text);
        std::map<std::size_t, int> by_index;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::size_t index = 0;
            int cluster = 0;
            if (!(ls >> index >> cluster))
                throw Error(assignments_path + ":" + std::to_string(lineno) +
                            ": expected 'index<TAB>cluster_id'");
            if (!by_index.emplace(index, cluster).second)
                throw Error(assignments_path + ": duplicate index " + std::to_string(index));
        }
        std::vector<int> pred;
        pred.reserve(by_index.size());
        for (const auto& [index, cluster] : by_index) {
            if (index != pred.size())
                throw Error(assignments_path + ": indices are not 0..n-1");
            pred.push_back(cluster);
        }

        const std::vector<int> truth = intern_labels(load_labels(labels_path));
        if (truth.size() != pred.size())
            throw Error("labels file has " + std::to_string(truth.size()) + " entries for " +
                        std::to_string(pred.size()) + " assignments");

        nlohmann::ordered_json j;
        j["purity"] = purity(pred, truth);
        j["nmi"] = nmi(pred, truth);
        j["f1"] = pairwise_f1(pred, truth);
        j["n"] = pred.size();
        const std::string body = j.dump(2) + "\n";
        if (!out_metrics.empty())
            write_file_atomic(out_metrics, body);
        else
            out << body;
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_synth(const SynthConfig& cfg, const SynthPaths& paths, std::ostream& err) {
    try {
        if (paths.out_tokens.empty()) throw Error("no output path given");
        const SynthData data = synth_planted(cfg);
        std::ostringstream labels;
        for (int l : data.labels) labels << l << '\n';
        write_file_atomic(paths.out_tokens, format_tokens(data.db));
        const std::string labels_path =
            paths.out_labels.empty() ? paths.out_tokens + ".labels" : paths.out_labels;
        write_file_atomic(labels_path, labels.str());
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace isct
