#include "oplab/model_operators.hpp"

#include <cmath>
#include <string>

namespace oplab {

Complex tm_basis_eval(const std::vector<DiskPoint>& zeros, std::size_t k, Complex z)
{
    if (k < 1 || k > zeros.size()) {
        throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    }
    if (!(std::abs(z) < 1.0)) {
        throw Error(ErrorKind::Boundary, "basis evaluation needs |z| < 1");
    }
    Complex prefix = 1.0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        const Complex w = zeros[j];
        prefix *= (z - w) / (1.0 - std::conj(w) * z);
    }
    const Complex w = zeros[k - 1];
    return prefix * std::sqrt(1.0 - std::norm(w)) / (1.0 - std::conj(w) * z);
}

ModelOperator model_matrix(const std::vector<DiskPoint>& zeros)
{
    const std::size_t n = zeros.size();
    if (n == 0 || n > kMaxModelSize) {
        throw Error(ErrorKind::Size, "model matrix takes 1 to 8 zeros");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double gap = std::abs(zeros[i].value() - zeros[j].value());
            if (gap < kZeroSeparation) {
                throw Error(ErrorKind::Separation, "zeros " + std::to_string(j) + " and " + std::to_string(i) +
                                                       " are " + std::to_string(gap) + " apart");
            }
        }
    }
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = std::sqrt(1.0 - std::norm(zeros[i].value()));
    }
    ModelOperator m{zeros, ComplexMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        m.matrix(i, i) = zeros[i].value();
        Complex chain = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            m.matrix(i, j) = chain * r[i] * r[j];
            chain *= -std::conj(zeros[j].value());
        }
    }
    return m;
}

ComplexMatrix t3_confluent(DiskPoint w)
{
    const Complex z = w.value();
    const double a = 1.0 - std::norm(z);
    const Complex b = -std::conj(z) * a;
    return ComplexMatrix{{z, a, b}, {0.0, z, a}, {0.0, 0.0, z}};
}

} // namespace oplab
