#pragma once

#include <vector>

#include "oplab/complex_matrix.hpp"
#include "oplab/disk_geometry.hpp"

namespace oplab {

inline constexpr double kZeroSeparation = 1e-8;
inline constexpr std::size_t kMaxModelSize = 8;

/// Compressed shift of a finite Blaschke product in the Takenaka-Malmquist basis.
struct ModelOperator {
    std::vector<DiskPoint> zeros;
    ComplexMatrix matrix;
};

/// phi_k(z) for 1 <= k <= n.
Complex tm_basis_eval(const std::vector<DiskPoint>& zeros, std::size_t k, Complex z);

/// Upper triangular, diagonal = zeros, (i, j) entry
/// prod_{i<k<j} (-conj w_k) * sqrt(1 - |w_i|^2) sqrt(1 - |w_j|^2).
ModelOperator model_matrix(const std::vector<DiskPoint>& zeros);

/// [[w, a, b], [0, w, a], [0, 0, w]] with a = 1 - |w|^2, b = -conj(w) a.
ComplexMatrix t3_confluent(DiskPoint w);

} // namespace oplab
