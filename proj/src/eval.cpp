#include "isct/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace isct {

namespace {

void check_lengths(const std::vector<int>& pred, const std::vector<int>& truth) {
    if (pred.size() != truth.size()) throw Error("labelings differ in length");
    if (pred.empty()) throw Error("labelings must cover at least one item");
}

std::map<int, std::size_t> dense_index(const std::vector<int>& labels) {
    std::map<int, std::size_t> idx;
    for (int l : labels) idx.emplace(l, 0);
    std::size_t next = 0;
    for (auto& [label, i] : idx) i = next++;
    return idx;
}

} // namespace

ContingencyTable contingency(const std::vector<int>& pred, const std::vector<int>& truth) {
    check_lengths(pred, truth);
    const auto rows = dense_index(pred), cols = dense_index(truth);
    ContingencyTable t;
    t.total = pred.size();
    t.counts.assign(rows.size(), std::vector<std::size_t>(cols.size(), 0));
    t.row_marginals.assign(rows.size(), 0);
    t.col_marginals.assign(cols.size(), 0);
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const std::size_t r = rows.at(pred[i]), c = cols.at(truth[i]);
        ++t.counts[r][c];
        ++t.row_marginals[r];
        ++t.col_marginals[c];
    }
    return t;
}

double purity(const std::vector<int>& pred, const std::vector<int>& truth) {
    const ContingencyTable t = contingency(pred, truth);
    std::size_t agree = 0;
    for (const auto& row : t.counts) agree += *std::max_element(row.begin(), row.end());
    return static_cast<double>(agree) / static_cast<double>(t.total);
}

double nmi(const std::vector<int>& pred, const std::vector<int>& truth) {
    const ContingencyTable t = contingency(pred, truth);
    const double n = static_cast<double>(t.total);

    const auto entropy = [&](const std::vector<std::size_t>& marginals) {
        double h = 0.0;
        for (std::size_t m : marginals) {
            if (m == 0) continue;
            const double p = static_cast<double>(m) / n;
            h -= p * std::log(p);
        }
        return h;
    };
    const double h_pred = entropy(t.row_marginals);
    const double h_truth = entropy(t.col_marginals);
    if (h_pred == 0.0 && h_truth == 0.0) return 1.0;
    if (h_pred == 0.0 || h_truth == 0.0) return 0.0;

    double mi = 0.0;
    for (std::size_t r = 0; r < t.counts.size(); ++r) {
        for (std::size_t c = 0; c < t.counts[r].size(); ++c) {
            const std::size_t cell = t.counts[r][c];
            if (cell == 0) continue;
            const double pij = static_cast<double>(cell) / n;
            const double pi = static_cast<double>(t.row_marginals[r]) / n;
            const double pj = static_cast<double>(t.col_marginals[c]) / n;
            mi += pij * std::log(pij / (pi * pj));
        }
    }
    return std::clamp(mi / (0.5 * (h_pred + h_truth)), 0.0, 1.0);
}

double pairwise_f1(const std::vector<int>& pred, const std::vector<int>& truth) {
    const ContingencyTable t = contingency(pred, truth);
    const auto pairs = [](std::size_t m) { return m * (m - 1) / 2; };

    std::size_t same_pred = 0, same_truth = 0, tp = 0;
    for (std::size_t m : t.row_marginals) same_pred += pairs(m);
    for (std::size_t m : t.col_marginals) same_truth += pairs(m);
    for (const auto& row : t.counts)
        for (std::size_t cell : row) tp += pairs(cell);

    if (same_pred == 0 && same_truth == 0) return 1.0;
    const double precision =
        same_pred == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(same_pred);
    const double recall =
        same_truth == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(same_truth);
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

} // namespace isct
