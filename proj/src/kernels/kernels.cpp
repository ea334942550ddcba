#include "isct/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace isct::kernels {

namespace detail {

// Row-sweep LCS over 8 pattern lanes at once. Lane j of row r holds
// dp[r][j][lane]; padding positions carry kUnknownItem, which no sequence
// item equals, so padded lanes only ever propagate the running max. Cells at
// positions <= len[lane] never read padded cells, so reading lane results at
// their own length is exact.
void lcs_block8_scalar(std::span<const item_id> seq, const Block8& block, std::int32_t* out) {
    const std::int32_t m = block.max_len;
    if (m == 0 || seq.empty()) {
        std::fill_n(out, 8, 0);
        return;
    }
    std::vector<std::int32_t> prev(static_cast<std::size_t>(m + 1) * 8, 0);
    std::vector<std::int32_t> cur(prev.size(), 0);
    for (const item_id si : seq) {
        for (std::int32_t j = 1; j <= m; ++j) {
            const std::size_t col = static_cast<std::size_t>(j) * 8;
            for (std::size_t lane = 0; lane < 8; ++lane) {
                const std::int32_t diag = prev[col - 8 + lane];
                const std::int32_t up = prev[col + lane];
                const std::int32_t left = cur[col - 8 + lane];
                cur[col + lane] = (si == block.cols[col - 8 + lane])
                                      ? diag + 1
                                      : std::max(up, left);
            }
        }
        std::swap(prev, cur);
    }
    for (std::size_t lane = 0; lane < 8; ++lane)
        out[lane] = prev[static_cast<std::size_t>(block.len[lane]) * 8 + lane];
}

double squared_l2_scalar(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

} // namespace detail

namespace {

using Lcs8Fn = void (*)(std::span<const item_id>, const Block8&, std::int32_t*);
using L2Fn = double (*)(std::span<const double>, std::span<const double>);

struct Dispatch {
    Backend backend = Backend::scalar;
    Lcs8Fn lcs8 = &detail::lcs_block8_scalar;
    L2Fn l2 = &detail::squared_l2_scalar;
};

bool cpu_has(Backend b) {
    switch (b) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
#if defined(ISCT_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Backend::neon:
#ifdef ISCT_HAVE_NEON
        return true;
#else
        return false;
#endif
    }
    return false;
}

Dispatch make_dispatch(Backend b) {
    Dispatch d;
    d.backend = b;
    switch (b) {
    case Backend::scalar:
        break;
#ifdef ISCT_HAVE_AVX2
    case Backend::avx2:
        d.lcs8 = &detail::lcs_block8_avx2;
        d.l2 = &detail::squared_l2_avx2;
        break;
#endif
#ifdef ISCT_HAVE_NEON
    case Backend::neon:
        d.lcs8 = &detail::lcs_block8_neon;
        d.l2 = &detail::squared_l2_neon;
        break;
#endif
    default:
        throw Error(std::string("backend not compiled in: ") + backend_name(b));
    }
    return d;
}

Backend pick_default() {
    if (const char* env = std::getenv("ISCT_BACKEND")) {
        for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
            if (std::strcmp(env, backend_name(b)) == 0) {
                if (!cpu_has(b))
                    throw Error(std::string("ISCT_BACKEND requests unavailable backend: ") + env);
                return b;
            }
        throw Error(std::string("unknown ISCT_BACKEND value: ") + env);
    }
    if (cpu_has(Backend::avx2)) return Backend::avx2;
    if (cpu_has(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

Dispatch& dispatch() {
    static Dispatch d = make_dispatch(pick_default());
    return d;
}

} // namespace

const char* backend_name(Backend b) {
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    }
    return "?";
}

Backend active_backend() { return dispatch().backend; }

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
        if (cpu_has(b)) out.push_back(b);
    return out;
}

void force_backend(Backend b) {
    if (!cpu_has(b))
        throw Error(std::string("backend not available on this machine: ") + backend_name(b));
    dispatch() = make_dispatch(b);
}

Block8 pack_block8(std::span<const Pattern> patterns, std::size_t first, std::size_t count) {
    if (count > 8) throw Error("pack_block8 takes at most 8 patterns");
    Block8 b;
    for (std::size_t k = 0; k < count; ++k) {
        const auto& p = patterns[first + k];
        b.len[k] = static_cast<std::int32_t>(p.size());
        b.max_len = std::max(b.max_len, b.len[k]);
    }
    b.cols.assign(static_cast<std::size_t>(b.max_len) * 8, kUnknownItem);
    for (std::size_t k = 0; k < count; ++k) {
        const auto& items = patterns[first + k].items;
        for (std::size_t j = 0; j < items.size(); ++j) b.cols[j * 8 + k] = items[j];
    }
    return b;
}

void lcs_block8(std::span<const item_id> seq, const Block8& block, std::int32_t* out) {
    dispatch().lcs8(seq, block, out);
}

double squared_l2(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw Error("squared_l2 requires equal-length vectors");
    return dispatch().l2(a, b);
}

} // namespace isct::kernels
