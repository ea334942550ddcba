#include "isct/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isct/rng.hpp"

namespace isct {

namespace {

// Cyclic Jacobi eigensolver for a symmetric matrix. On return the diagonal
// of a holds eigenvalues and the columns of v the matching eigenvectors.
void jacobi_eigen(Matrix& a, Matrix& v) {
    const std::size_t m = a.rows();
    v = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i) v(i, i) = 1.0;
    if (m <= 1) return;

    double fr2 = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) fr2 += a(i, j) * a(i, j);
    const double stop = fr2 * 1e-28 + 1e-300;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off2 = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) off2 += 2.0 * a(i, j) * a(i, j);
        if (off2 <= stop) break;

        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
}

// Symmetric operator for the smaller side of the centered matrix, applied
// without forming it: either xc * xc^T on row space or xc^T * xc on column
// space. Both applications cost one pass over xc each way.
struct SideOp {
    const Matrix& xc;
    bool row_side; // true: n x n operator, false: d x d

    std::size_t dim() const { return row_side ? xc.rows() : xc.cols(); }

    void apply(std::span<const double> in, std::span<double> out, std::vector<double>& tmp) const {
        const std::size_t n = xc.rows(), d = xc.cols();
        if (row_side) {
            tmp.assign(d, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const double w = in[i];
                if (w == 0.0) continue;
                const auto r = xc.row(i);
                for (std::size_t j = 0; j < d; ++j) tmp[j] += w * r[j];
            }
            for (std::size_t i = 0; i < n; ++i) {
                const auto r = xc.row(i);
                double acc = 0.0;
                for (std::size_t j = 0; j < d; ++j) acc += r[j] * tmp[j];
                out[i] = acc;
            }
        } else {
            tmp.assign(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const auto r = xc.row(i);
                double acc = 0.0;
                for (std::size_t j = 0; j < d; ++j) acc += r[j] * in[j];
                tmp[i] = acc;
            }
            std::fill(out.begin(), out.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const double w = tmp[i];
                if (w == 0.0) continue;
                const auto r = xc.row(i);
                for (std::size_t j = 0; j < d; ++j) out[j] += w * r[j];
            }
        }
    }

    // Explicit matrix, only for the small-dimension path.
    Matrix materialize() const {
        const std::size_t m = dim();
        Matrix a(m, m);
        if (row_side) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) {
                    double acc = 0.0;
                    const auto ri = xc.row(i), rj = xc.row(j);
                    for (std::size_t k = 0; k < xc.cols(); ++k) acc += ri[k] * rj[k];
                    a(i, j) = a(j, i) = acc;
                }
        } else {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) {
                    double acc = 0.0;
                    for (std::size_t k = 0; k < xc.rows(); ++k) acc += xc(k, i) * xc(k, j);
                    a(i, j) = a(j, i) = acc;
                }
        }
        return a;
    }
};

// Columns of v, modified Gram-Schmidt. Columns that collapse numerically are
// redrawn from rng (which has a fixed seed, so this stays reproducible).
void orthonormalize_columns(Matrix& v, Rng& rng) {
    const std::size_t m = v.rows(), b = v.cols();
    for (std::size_t j = 0; j < b; ++j) {
        for (int attempt = 0; attempt < 2; ++attempt) {
            for (std::size_t i = 0; i < j; ++i) {
                double dot = 0.0;
                for (std::size_t k = 0; k < m; ++k) dot += v(k, i) * v(k, j);
                for (std::size_t k = 0; k < m; ++k) v(k, j) -= dot * v(k, i);
            }
            double norm2 = 0.0;
            for (std::size_t k = 0; k < m; ++k) norm2 += v(k, j) * v(k, j);
            if (norm2 > 1e-260) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (std::size_t k = 0; k < m; ++k) v(k, j) *= inv;
                break;
            }
            if (attempt == 1) {
                for (std::size_t k = 0; k < m; ++k) v(k, j) = 0.0;
                break;
            }
            for (std::size_t k = 0; k < m; ++k) v(k, j) = 2.0 * rng.uniform_double() - 1.0;
        }
    }
}

struct EigenPairs {
    std::vector<double> values; // descending
    Matrix vectors;             // dim x count, columns matched to values
};

EigenPairs top_pairs_small(const SideOp& op, std::size_t keep) {
    Matrix a = op.materialize();
    Matrix v;
    jacobi_eigen(a, v);
    const std::size_t m = a.rows();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    EigenPairs out;
    out.values.resize(keep);
    out.vectors = Matrix(m, keep);
    for (std::size_t c = 0; c < keep; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (std::size_t k = 0; k < m; ++k) out.vectors(k, c) = v(k, order[c]);
    }
    return out;
}

// Block subspace iteration with a Rayleigh-Ritz finish, for operators too
// large to hand to Jacobi whole. The iteration seed is a constant so the
// decomposition of a given matrix never varies.
EigenPairs top_pairs_iterative(const SideOp& op, std::size_t keep) {
    const std::size_t m = op.dim();
    const std::size_t b = std::min(m, keep + 8);
    Rng rng(0x5ca1ab1e5eedULL);
    Matrix v(m, b);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < b; ++j) v(k, j) = 2.0 * rng.uniform_double() - 1.0;
    orthonormalize_columns(v, rng);

    Matrix w(m, b);
    std::vector<double> tmp, col_in(m), col_out(m);
    std::vector<double> est(b, 0.0), prev(b, 0.0);
    int stable = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        for (std::size_t j = 0; j < b; ++j) {
            for (std::size_t k = 0; k < m; ++k) col_in[k] = v(k, j);
            op.apply(col_in, col_out, tmp);
            double norm2 = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                w(k, j) = col_out[k];
                norm2 += col_out[k] * col_out[k];
            }
            est[j] = std::sqrt(norm2);
        }
        double top = 1e-300, delta = 0.0;
        for (std::size_t j = 0; j < b; ++j) {
            top = std::max(top, est[j]);
            delta = std::max(delta, std::abs(est[j] - prev[j]));
        }
        prev = est;
        v = w;
        orthonormalize_columns(v, rng);
        stable = (delta <= 1e-12 * top) ? stable + 1 : 0;
        if (stable >= 3) break;
    }

    // Rayleigh-Ritz on the converged basis.
    Matrix av(m, b);
    for (std::size_t j = 0; j < b; ++j) {
        for (std::size_t k = 0; k < m; ++k) col_in[k] = v(k, j);
        op.apply(col_in, col_out, tmp);
        for (std::size_t k = 0; k < m; ++k) av(k, j) = col_out[k];
    }
    Matrix small(b, b);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = i; j < b; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < m; ++k) acc += v(k, i) * av(k, j);
            small(i, j) = small(j, i) = acc;
        }
    Matrix u;
    jacobi_eigen(small, u);
    std::vector<std::size_t> order(b);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return small(x, x) > small(y, y); });

    EigenPairs out;
    out.values.resize(keep);
    out.vectors = Matrix(m, keep);
    for (std::size_t c = 0; c < keep; ++c) {
        out.values[c] = small(order[c], order[c]);
        for (std::size_t k = 0; k < m; ++k) {
            double acc = 0.0;
            for (std::size_t j = 0; j < b; ++j) acc += v(k, j) * u(j, order[c]);
            out.vectors(k, c) = acc;
        }
    }
    return out;
}

} // namespace

PcaResult pca_project(const Matrix& x, std::size_t target_dims) {
    const std::size_t n = x.rows(), d = x.cols();
    const std::size_t keep = std::min({target_dims, n, d});

    PcaResult res;
    res.mean.assign(d, 0.0);
    res.scores = Matrix(n, keep);
    res.components = Matrix(keep, d);
    res.eigenvalues.assign(keep, 0.0);
    if (keep == 0) return res;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) res.mean[j] += x(i, j);
    for (std::size_t j = 0; j < d; ++j) res.mean[j] /= static_cast<double>(n);

    Matrix xc(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) xc(i, j) = x(i, j) - res.mean[j];

    const SideOp op{xc, n < d};
    const std::size_t m = op.dim();
    const EigenPairs pairs =
        (m <= 128) ? top_pairs_small(op, keep) : top_pairs_iterative(op, keep);

    const double lam_max = pairs.values.empty() ? 0.0 : std::max(pairs.values[0], 0.0);
    const double lam_eps = lam_max * 1e-12;
    const double denom = static_cast<double>(n > 1 ? n - 1 : 1);

    std::vector<double> comp(d);
    for (std::size_t c = 0; c < keep; ++c) {
        const double lam = pairs.values[c];
        const bool live = lam > lam_eps;

        std::fill(comp.begin(), comp.end(), 0.0);
        if (op.row_side) {
            if (live) {
                // Row-space eigenvector u: component is xc^T u / sqrt(lam).
                const double inv_sigma = 1.0 / std::sqrt(lam);
                for (std::size_t i = 0; i < n; ++i) {
                    const double w = pairs.vectors(i, c) * inv_sigma;
                    if (w == 0.0) continue;
                    const auto r = xc.row(i);
                    for (std::size_t j = 0; j < d; ++j) comp[j] += w * r[j];
                }
            }
        } else {
            for (std::size_t j = 0; j < d; ++j) comp[j] = pairs.vectors(j, c);
        }

        // Earlier rows are exactly unit and mutually orthogonal, so one
        // projection pass removes any drift the lam-scaled construction left.
        for (std::size_t prev = 0; prev < c; ++prev) {
            double dot = 0.0;
            for (std::size_t j = 0; j < d; ++j) dot += comp[j] * res.components(prev, j);
            for (std::size_t j = 0; j < d; ++j) comp[j] -= dot * res.components(prev, j);
        }
        double norm2 = 0.0;
        for (std::size_t j = 0; j < d; ++j) norm2 += comp[j] * comp[j];
        if (norm2 < 0.25) {
            // Zero-variance direction with nothing usable from the solver:
            // take the canonical axis least covered by the rows stored so far.
            std::size_t axis = 0;
            double best = -1.0;
            for (std::size_t t = 0; t < d; ++t) {
                double covered = 0.0;
                for (std::size_t prev = 0; prev < c; ++prev)
                    covered += res.components(prev, t) * res.components(prev, t);
                if (1.0 - covered > best) {
                    best = 1.0 - covered;
                    axis = t;
                }
            }
            std::fill(comp.begin(), comp.end(), 0.0);
            comp[axis] = 1.0;
            for (std::size_t prev = 0; prev < c; ++prev) {
                const double dot = res.components(prev, axis);
                for (std::size_t j = 0; j < d; ++j) comp[j] -= dot * res.components(prev, j);
            }
            norm2 = 0.0;
            for (std::size_t j = 0; j < d; ++j) norm2 += comp[j] * comp[j];
        }
        const double inv_norm = 1.0 / std::sqrt(norm2);
        for (std::size_t j = 0; j < d; ++j) comp[j] *= inv_norm;

        // Canonical sign: the loading with the largest magnitude (first such
        // index on ties) is made positive.
        std::size_t arg = 0;
        for (std::size_t j = 1; j < d; ++j)
            if (std::abs(comp[j]) > std::abs(comp[arg])) arg = j;
        const double flip = comp[arg] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < d; ++j) res.components(c, j) = flip * comp[j];

        if (!live) continue; // eigenvalue and scores stay exactly zero
        res.eigenvalues[c] = lam / denom;
        if (op.row_side) {
            const double sigma = std::sqrt(lam);
            for (std::size_t i = 0; i < n; ++i)
                res.scores(i, c) = flip * sigma * pairs.vectors(i, c);
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const auto r = xc.row(i);
                double acc = 0.0;
                for (std::size_t j = 0; j < d; ++j) acc += r[j] * res.components(c, j);
                res.scores(i, c) = acc;
            }
        }
    }
    return res;
}

} // namespace isct
