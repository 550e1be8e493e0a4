#pragma once

#include <vector>

#include "oplab/complex_matrix.hpp"
#include "oplab/disk_geometry.hpp"
#include "oplab/multi_schur_function.hpp"
#include "oplab/report.hpp"
#include "oplab/schur_function.hpp"

namespace oplab {

inline constexpr double kPointSeparation = 1e-8;

/// lhs rho(f(w1), f(w2)), rhs rho(w1, w2).
InequalityReport schwarz_pick_two_point(const SchurFunction& f, DiskPoint w1, DiskPoint w2,
                                        double tolerance = kDefaultTolerance);

/// lhs (1 - |w|^2)|f'(w)| / (1 - |f(w)|^2), rhs 1.
InequalityReport schwarz_pick_derivative(const SchurFunction& f, DiskPoint w, double tolerance = kDefaultTolerance);

/// lhs rho(f*(w1, w2), f*(w3, w2)), rhs rho(w1, w3). When both f* values are
/// unimodular (f an automorphism) the rho form is 0/0 and the report switches
/// to the cross-multiplied form S(w1, w3)|f*_1 - f*_3|^2 <= |w1 - w3|^2 S(f*_1, f*_3).
/// Coinciding f-values are reported as trivially holding.
InequalityReport beardon_minda(const SchurFunction& f, DiskPoint w1, DiskPoint w2, DiskPoint w3,
                               double tolerance = kDefaultTolerance);

/// Largest relative deviation in the two algebraic identities behind the
/// three-point inequality:
///   C_i = |1 - conj(f2) f_i|^2 (1 - |f*(w_i, w2)|^2),
///   (1 - |f2|^2) A + B = (f*(w1, w2) - f*(w3, w2))(1 - conj(f2) f1)(1 - conj(f2) f3).
double bm_proof_identity_check(const SchurFunction& f, DiskPoint w1, DiskPoint w2, DiskPoint w3);

struct PeschlDerivatives {
    Complex d1;
    Complex d2;
};

/// Closed formulas from f(w), f'(w), f''(w).
PeschlDerivatives peschl(const SchurFunction& f, DiskPoint w);

/// g = phi_{f(w)} o f o phi_{-w} expanded by DFT at radius 0.5; d1 = g'(0), d2 = g''(0).
PeschlDerivatives peschl_expansion(const SchurFunction& f, DiskPoint w);

inline constexpr double kWirtingerStep = 1e-5;
inline constexpr double kWirtingerAgreement = 1e-3;
inline constexpr double kCriticalPoint = 1e-3;

/// lhs |D2|, rhs 2(1 - |D1|^2). The context carries the finite-difference
/// Wirtinger check of |dGamma/dw| = |D2| / (2(1 - |w|^2)), skipped when |D1| < 1e-3.
InequalityReport yamashita(const SchurFunction& f, DiskPoint w, double tolerance = kDefaultTolerance);

/// Two-point tuple T_i = [[a_i, d(a_i - b_i)], [0, b_i]] with
/// d = min_i sqrt((1 - |a_i|^2)(1 - |b_i|^2)) / |a_i - b_i| over a_i != b_i.
double polydisk_tuple_constant(const std::vector<Complex>& a, const std::vector<Complex>& b);
std::vector<ComplexMatrix> polydisk_two_point_tuple(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// T_k = [[a_k, e^{i theta_k}(1 - |a_k|^2)], [0, a_k]] with theta_k = -arg(df/dz_k(a)).
std::vector<ComplexMatrix> polydisk_derivative_tuple(const MultiSchurFunction& f, const std::vector<Complex>& a);

/// lhs rho(f(a), f(b)), rhs max_i rho(a_i, b_i).
InequalityReport polydisk_schwarz_pick(const MultiSchurFunction& f, const std::vector<Complex>& a,
                                       const std::vector<Complex>& b, double tolerance = kDefaultTolerance);

/// lhs sum_i (1 - |a_i|^2)|df/dz_i(a)|, rhs 1 - |f(a)|^2.
InequalityReport polydisk_derivative(const MultiSchurFunction& f, const std::vector<Complex>& a,
                                     double tolerance = kDefaultTolerance);

/// Several-variable Peschl derivatives along the diagonal direction:
///   d1 = sum_j s_j f_j / (1 - |f|^2),
///   d2 = sum_j s_j^2/(1 - |f|^2) (f_jj - 2 conj(w_j) f_j / s_j + 2 conj(f) f_j^2 / (1 - |f|^2))
///      + 2 sum_{j<k} s_j s_k/(1 - |f|^2) (f_jk + 2 conj(f) f_j f_k / (1 - |f|^2)),
/// s_j = 1 - |w_j|^2.
PeschlDerivatives peschl_multi(const MultiSchurFunction& f, const std::vector<Complex>& w);

/// DFT expansion of t -> g(t, ..., t).
PeschlDerivatives peschl_multi_expansion(const MultiSchurFunction& f, const std::vector<Complex>& w);

InequalityReport peschl_multi_inequality(const MultiSchurFunction& f, const std::vector<Complex>& w,
                                         double tolerance = kDefaultTolerance);

/// Wiener |a_k| <= 1 - |a_0|^2, the two-index inequality
/// |a_{n+k}(1 - |a_0|^2) + a_n a_k conj(a_0)|^2 <= ((1 - |a_0|^2)^2 - |a_n|^2)((1 - |a_0|^2)^2 - |a_k|^2),
/// and the improved Wiener bound. A fourth report, |a_{n+k}| <= sqrt(1 - |a_n|^2) sqrt(1 - |a_k|^2),
/// is added when |a_0| <= 1e-12.
std::vector<InequalityReport> coefficient_inequalities(const SchurFunction& f, int n, int k,
                                                       double tolerance = kDefaultTolerance);

/// lhs |f^(k)(z)|, rhs k!(1 - |f(z)|^2) / ((1 - |z|)^k (1 + |z|)).
InequalityReport ruscheweyh(const SchurFunction& f, DiskPoint z, int k, double tolerance = kDefaultTolerance);

} // namespace oplab
