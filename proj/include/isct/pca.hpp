#pragma once

#include <cstddef>

#include "isct/matrix.hpp"

namespace isct {

struct PcaResult {
    Matrix scores;       // rows x dims projection of the centered input
    Matrix components;   // dims x cols principal axes, rows orthonormal
    std::vector<double> eigenvalues; // descending, one per kept dim
    std::vector<double> mean;        // column means of the input
};

// Project rows of x onto the top principal components. The kept dimension is
// min(target_dims, rows, cols); directions with (numerically) zero variance
// yield zero score columns. Each component's sign is fixed so its
// largest-magnitude loading is positive, making results reproducible.
PcaResult pca_project(const Matrix& x, std::size_t target_dims);

} // namespace isct
