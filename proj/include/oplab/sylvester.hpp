#pragma once

#include <array>

#include "oplab/complex_matrix.hpp"
#include "oplab/report.hpp"
#include "oplab/schur_function.hpp"

namespace oplab {

inline constexpr double kMinSpectralGap = 1e-6;
inline constexpr std::size_t kMaxSylvesterBlock = 5;

/// A X - X B = Y.
struct SylvesterProblem {
    ComplexMatrix a;
    ComplexMatrix b;
    ComplexMatrix y;
    double spectral_gap = 0.0; // min |lambda_A - lambda_B|
};

SylvesterProblem make_sylvester_problem(ComplexMatrix a, ComplexMatrix b, ComplexMatrix y);

double spectral_gap(const ComplexMatrix& a, const ComplexMatrix& b);

/// Dense solve of (I kron A - B^T kron I) vec X = vec Y.
ComplexMatrix solve_sylvester(const SylvesterProblem& prob);

/// Trapezoidal rule for (1/2 pi i) \oint (A - xi)^{-1} Y (B - xi)^{-1} dxi on a
/// circle centred at the centroid of spec(A).
ComplexMatrix solve_sylvester_contour(const SylvesterProblem& prob, int quad_points = 256);

struct Circle {
    Complex center;
    double radius = 0.0;
};

/// Radius is the midpoint of [r_A + gap/4, d_B - gap/4]; throws Contour when
/// that interval is empty.
Circle separating_circle(const SylvesterProblem& prob);

struct OperatorSchwarzPickResult {
    InequalityReport report; // lhs ||Y||, rhs 1
    ComplexMatrix x;
    ComplexMatrix m; // f(W1) X - X f(W2)
    ComplexMatrix y;
    double block_norm = 0.0;
    double reconstruction_error = 0.0;
};

/// Solves W1 X - X W2 = D_{W1*} V D_{W2}, then extracts Y with
/// f(W1) X - X f(W2) = D_{f(W1)*} Y D_{f(W2)}.
OperatorSchwarzPickResult operator_schwarz_pick(const ComplexMatrix& w1, const ComplexMatrix& w2,
                                                const ComplexMatrix& v, const SchurFunction& f,
                                                double tolerance = kDefaultTolerance);

struct OperatorBeardonMindaResult {
    InequalityReport report; // lhs max ||Y_i||, rhs 1
    std::array<ComplexMatrix, 3> x;
    ComplexMatrix t;  // [[W1, A1, B], [0, W2, A2], [0, 0, W3]]
    ComplexMatrix ft; // f(T) from the unipotent factorization
    std::array<ComplexMatrix, 3> y;
    std::array<double, 3> witness_norms{};
    std::array<double, 3> reconstruction_errors{};
    double factorization_error = 0.0; // against f(T) by Schur + path sum
};

OperatorBeardonMindaResult operator_beardon_minda(const ComplexMatrix& w1, const ComplexMatrix& w2,
                                                  const ComplexMatrix& w3, const ComplexMatrix& v1,
                                                  const ComplexMatrix& v2, const ComplexMatrix& v3,
                                                  const SchurFunction& f, double tolerance = kDefaultTolerance);

} // namespace oplab
