#include "isct/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isct/kernels.hpp"
#include "isct/types.hpp"

namespace isct {

namespace {

// Nearest-center assignment; ties go to the lower center index. Returns the
// inertia and fills labels and per-point squared distances.
double assign_points(const Matrix& x, const Matrix& centers, std::vector<int>& labels,
                     std::vector<double>& d2) {
    const std::size_t n = x.rows(), k = centers.rows();
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto xi = x.row(i);
        int best = 0;
        double best_d = kernels::squared_l2(xi, centers.row(0));
        for (std::size_t c = 1; c < k; ++c) {
            const double d = kernels::squared_l2(xi, centers.row(c));
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(c);
            }
        }
        labels[i] = best;
        d2[i] = best_d;
        inertia += best_d;
    }
    return inertia;
}

Matrix plusplus_seed(const Matrix& x, std::size_t k, Rng& rng) {
    const std::size_t n = x.rows(), dims = x.cols();
    Matrix centers(k, dims);
    std::vector<double> d2(n, std::numeric_limits<double>::infinity());

    std::size_t pick = rng.uniform_below(n);
    for (std::size_t j = 0; j < dims; ++j) centers(0, j) = x(pick, j);

    for (std::size_t c = 1; c < k; ++c) {
        // Fold the newest center into the running min distances, then sample
        // the next center proportionally to squared distance.
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = kernels::squared_l2(x.row(i), centers.row(c - 1));
            if (d < d2[i]) d2[i] = d;
            total += d2[i];
        }
        if (total <= 0.0) {
            pick = rng.uniform_below(n);
        } else {
            const double r = rng.uniform_double() * total;
            double cum = 0.0;
            std::size_t last_nonzero = 0;
            bool found = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (d2[i] > 0.0) last_nonzero = i;
                cum += d2[i];
                if (cum > r) {
                    pick = i;
                    found = true;
                    break;
                }
            }
            if (!found) pick = last_nonzero; // cumulative rounding fell short
        }
        for (std::size_t j = 0; j < dims; ++j) centers(c, j) = x(pick, j);
    }
    return centers;
}

struct SingleRun {
    std::vector<int> labels;
    Matrix centers;
    double inertia = 0.0;
    std::vector<double> trace;
    int iterations = 0;
};

SingleRun run_single(const Matrix& x, const KMeansConfig& cfg, Rng& rng) {
    const std::size_t n = x.rows(), dims = x.cols(), k = cfg.k;
    SingleRun out;
    out.centers = plusplus_seed(x, k, rng);
    out.labels.assign(n, 0);
    std::vector<double> d2(n, 0.0);
    std::vector<int> counts(k, 0);

    int iter = 0;
    for (; iter < cfg.max_iters; ++iter) {
        out.trace.push_back(assign_points(x, out.centers, out.labels, d2));

        // An empty cluster adopts the point farthest from its center, taken
        // from a cluster that can spare one. Moving that point before the
        // mean update keeps the objective from rising.
        std::fill(counts.begin(), counts.end(), 0);
        for (int l : out.labels) ++counts[static_cast<std::size_t>(l)];
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] != 0) continue;
            std::size_t far = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[static_cast<std::size_t>(out.labels[i])] < 2) continue;
                if (far == n || d2[i] > d2[far]) far = i;
            }
            --counts[static_cast<std::size_t>(out.labels[far])];
            out.labels[far] = static_cast<int>(c);
            counts[c] = 1;
            d2[far] = 0.0;
        }

        Matrix next(k, dims);
        for (std::size_t i = 0; i < n; ++i) {
            const auto xi = x.row(i);
            auto cr = next.row(static_cast<std::size_t>(out.labels[i]));
            for (std::size_t j = 0; j < dims; ++j) cr[j] += xi[j];
        }
        double max_shift = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            const double inv = 1.0 / static_cast<double>(counts[c]);
            auto cr = next.row(c);
            for (std::size_t j = 0; j < dims; ++j) cr[j] *= inv;
            max_shift = std::max(max_shift, std::sqrt(kernels::squared_l2(cr, out.centers.row(c))));
        }
        out.centers = std::move(next);
        if (max_shift < cfg.tol) {
            ++iter;
            break;
        }
    }
    out.iterations = iter;
    out.inertia = assign_points(x, out.centers, out.labels, d2);
    out.trace.push_back(out.inertia);
    return out;
}

} // namespace

KMeansResult kmeans(const Matrix& x, const KMeansConfig& cfg, std::uint64_t seed) {
    if (cfg.k < 1) throw Error("kmeans requires k >= 1");
    if (cfg.k > x.rows()) throw Error("kmeans requires k <= number of points");
    if (cfg.restarts < 1) throw Error("kmeans requires at least one restart");

    Rng base(seed);
    KMeansResult best;
    bool have = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rr(base.fork_seed(static_cast<std::uint64_t>(r)));
        SingleRun run = run_single(x, cfg, rr);
        if (!have || run.inertia < best.inertia) {
            best.labels = std::move(run.labels);
            best.centers = std::move(run.centers);
            best.inertia = run.inertia;
            best.inertia_trace = std::move(run.trace);
            best.best_restart = r;
            best.iterations = run.iterations;
            have = true;
        }
    }
    return best;
}

} // namespace isct
