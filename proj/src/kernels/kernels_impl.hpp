#pragma once

#include "isct/kernels.hpp"

// Per-backend entry points. Each TU is compiled with the matching ISA flags,
// so nothing here may be called before the runtime CPU check passes.
namespace isct::kernels::detail {

void lcs_block8_scalar(std::span<const item_id> seq, const Block8& block, std::int32_t* out);
double squared_l2_scalar(std::span<const double> a, std::span<const double> b);

#ifdef ISCT_HAVE_AVX2
void lcs_block8_avx2(std::span<const item_id> seq, const Block8& block, std::int32_t* out);
double squared_l2_avx2(std::span<const double> a, std::span<const double> b);
#endif

#ifdef ISCT_HAVE_NEON
void lcs_block8_neon(std::span<const item_id> seq, const Block8& block, std::int32_t* out);
double squared_l2_neon(std::span<const double> a, std::span<const double> b);
#endif

} // namespace isct::kernels::detail
