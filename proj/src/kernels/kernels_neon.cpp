// NEON variants, built on aarch64 where the ISA is baseline.
#include "kernels_impl.hpp"

#ifdef ISCT_HAVE_NEON

#include <arm_neon.h>

#include <algorithm>
#include <vector>

namespace isct::kernels::detail {

void lcs_block8_neon(std::span<const item_id> seq, const Block8& block, std::int32_t* out) {
    const std::int32_t m = block.max_len;
    if (m == 0 || seq.empty()) {
        std::fill_n(out, 8, 0);
        return;
    }
    // 8 lanes as two int32x4 halves, same sweep as the scalar kernel.
    std::vector<std::int32_t> prev(static_cast<std::size_t>(m + 1) * 8, 0);
    std::vector<std::int32_t> cur(prev.size(), 0);
    const int32x4_t ones = vdupq_n_s32(1);
    for (const item_id si : seq) {
        const int32x4_t vsi = vdupq_n_s32(si);
        for (std::int32_t j = 1; j <= m; ++j) {
            const std::size_t col = static_cast<std::size_t>(j) * 8;
            for (std::size_t half = 0; half < 8; half += 4) {
                const int32x4_t pj = vld1q_s32(block.cols.data() + col - 8 + half);
                const uint32x4_t eq = vceqq_s32(vsi, pj);
                const int32x4_t diag = vld1q_s32(prev.data() + col - 8 + half);
                const int32x4_t up = vld1q_s32(prev.data() + col + half);
                const int32x4_t left = vld1q_s32(cur.data() + col - 8 + half);
                const int32x4_t take = vaddq_s32(diag, ones);
                const int32x4_t skip = vmaxq_s32(up, left);
                vst1q_s32(cur.data() + col + half, vbslq_s32(eq, take, skip));
            }
        }
        std::swap(prev, cur);
    }
    for (std::size_t lane = 0; lane < 8; ++lane)
        out[lane] = prev[static_cast<std::size_t>(block.len[lane]) * 8 + lane];
}

double squared_l2_neon(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t va = vld1q_f64(a.data() + i);
        const float64x2_t vb = vld1q_f64(b.data() + i);
        const float64x2_t d = vsubq_f64(va, vb);
        acc = vfmaq_f64(acc, d, d);
    }
    double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

} // namespace isct::kernels::detail

#endif // ISCT_HAVE_NEON
