#pragma once

#include <vector>

#include "oplab/complex_matrix.hpp"

namespace oplab {

/// Thin decomposition M = U diag(sigma) V*, sigma sorted decreasingly and of
/// length min(rows, cols). Columns of U belonging to zero singular values are
/// left at zero.
struct SingularValueDecomposition {
    ComplexMatrix u;
    std::vector<double> sigma;
    ComplexMatrix v;
};

/// One-sided cyclic Jacobi.
SingularValueDecomposition svd(const ComplexMatrix& m);
std::vector<double> singular_values(const ComplexMatrix& m);
double operator_norm(const ComplexMatrix& m);

/// H = vectors * diag(values) * vectors*, values ascending.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic Jacobi; the input must be Hermitian within 1e-12 (relative to its size).
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// M = q * t * q* with t upper triangular and q unitary.
struct SchurDecomposition {
    ComplexMatrix q;
    ComplexMatrix t;
};

/// Householder reduction to Hessenberg form followed by implicit single-shift
/// QR sweeps. Throws Convergence after 60 sweeps per eigenvalue.
SchurDecomposition schur(const ComplexMatrix& m);

/// Eigenvalues with multiplicity. Upper triangular input returns its diagonal
/// untouched.
std::vector<Complex> spectrum(const ComplexMatrix& m);

/// Positive semidefinite square root. Eigenvalues in [-negativity_tol, 0)
/// are clamped to zero.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& h, double negativity_tol = 1e-10);

/// D_T = (I - T*T)^{1/2}; T must satisfy ||T|| <= 1 + tolerance.
ComplexMatrix defect(const ComplexMatrix& t, double tolerance = kDefaultTolerance);
/// D_{T*} = (I - T T*)^{1/2}.
ComplexMatrix defect_adjoint(const ComplexMatrix& t, double tolerance = kDefaultTolerance);

struct ContractionVerdict {
    bool is_contraction = false;
    double norm = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
};

ContractionVerdict is_contraction(const ComplexMatrix& m, double tolerance = kDefaultTolerance);

inline constexpr double kPseudoInverseCutoff = 1e-12;

/// Moore-Penrose inverse; singular values at or below cutoff count as zero.
ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double cutoff = kPseudoInverseCutoff);

/// Orthogonal projector onto the kernel of m (same cutoff convention).
ComplexMatrix kernel_projector(const ComplexMatrix& m, double cutoff = kPseudoInverseCutoff);

ComplexMatrix inverse(const ComplexMatrix& m);

/// Solves a x = b for a dense n x n row-major system by LU with partial
/// pivoting. Not bound by the matrix dimension cap. Throws Singular when a
/// pivot falls below 1e-14 times the largest entry.
std::vector<Complex> solve_linear_system(std::vector<Complex> a, std::vector<Complex> b, std::size_t n);

} // namespace oplab
