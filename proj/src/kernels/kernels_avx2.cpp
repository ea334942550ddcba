// Compiled with -mavx2 -mfma; reached only after the cpuid check passes.
#include "kernels_impl.hpp"

#ifdef ISCT_HAVE_AVX2

#include <immintrin.h>

#include <algorithm>
#include <vector>

namespace isct::kernels::detail {

void lcs_block8_avx2(std::span<const item_id> seq, const Block8& block, std::int32_t* out) {
    const std::int32_t m = block.max_len;
    if (m == 0 || seq.empty()) {
        std::fill_n(out, 8, 0);
        return;
    }
    // Same row sweep as the scalar kernel with the 8 lanes in one vector.
    std::vector<std::int32_t> prev(static_cast<std::size_t>(m + 1) * 8, 0);
    std::vector<std::int32_t> cur(prev.size(), 0);
    const __m256i ones = _mm256_set1_epi32(1);
    for (const item_id si : seq) {
        const __m256i vsi = _mm256_set1_epi32(si);
        for (std::int32_t j = 1; j <= m; ++j) {
            const std::size_t col = static_cast<std::size_t>(j) * 8;
            const __m256i pj = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(block.cols.data() + col - 8));
            const __m256i eq = _mm256_cmpeq_epi32(vsi, pj);
            const __m256i diag =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev.data() + col - 8));
            const __m256i up =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev.data() + col));
            const __m256i left =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cur.data() + col - 8));
            const __m256i take = _mm256_add_epi32(diag, ones);
            const __m256i skip = _mm256_max_epi32(up, left);
            const __m256i res = _mm256_blendv_epi8(skip, take, eq);
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(cur.data() + col), res);
        }
        std::swap(prev, cur);
    }
    for (std::size_t lane = 0; lane < 8; ++lane)
        out[lane] = prev[static_cast<std::size_t>(block.len[lane]) * 8 + lane];
}

double squared_l2_avx2(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a.data() + i);
        const __m256d vb = _mm256_loadu_pd(b.data() + i);
        const __m256d d = _mm256_sub_pd(va, vb);
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

} // namespace isct::kernels::detail

#endif // ISCT_HAVE_AVX2
