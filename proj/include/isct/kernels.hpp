#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isct/types.hpp"

// Hot inner loops (LCS featurization, k-means distances) exist as a scalar
// reference implementation plus SIMD variants. One backend is picked at
// startup from CPU capabilities; every variant must produce the same results
// as the reference (exactly for integer kernels, to rounding for float ones),
// which the test suite checks on whatever backends the host exposes.
namespace isct::kernels {

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);

// Backend currently used by the dispatched entry points.
Backend active_backend();

// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();

// Pin the dispatch to one backend (tests, benchmarking). Throws Error if the
// backend is not available here. The ISCT_BACKEND environment variable
// (scalar|avx2|neon) applies the same override at startup.
void force_backend(Backend b);

// Up to 8 patterns packed column-major for the block LCS kernel:
// cols[j * 8 + lane] is item j of pattern `lane`, kUnknownItem past the end
// of a lane. Unused lanes have len 0.
struct Block8 {
    std::vector<item_id> cols;
    std::array<std::int32_t, 8> len{};
    std::int32_t max_len = 0;
};

Block8 pack_block8(std::span<const Pattern> patterns, std::size_t first, std::size_t count);

// LCS length of seq against each pattern lane of the block. out[lane] is
// written for all 8 lanes (0 for unused lanes).
void lcs_block8(std::span<const item_id> seq, const Block8& block, std::int32_t* out);

// Squared Euclidean distance. a and b must have equal length.
double squared_l2(std::span<const double> a, std::span<const double> b);

} // namespace isct::kernels
