#pragma once

#include <vector>

#include "oplab/complex_matrix.hpp"
#include "oplab/multi_schur_function.hpp"
#include "oplab/report.hpp"
#include "oplab/schur_function.hpp"

namespace oplab {

inline constexpr double kNodeSnap = 1e-12;
inline constexpr double kNodeConfluence = 1e-8;
inline constexpr std::size_t kMaxNodes = 8;
inline constexpr int kMaxTupleDegree = 32;

/// entry(k, j) = [f(z_k), ..., f(z_{k+j})].
struct DividedDifferenceTable {
    std::vector<Complex> nodes;
    std::vector<std::vector<Complex>> table; // table[j][k]

    Complex entry(std::size_t k, std::size_t j) const { return table.at(j).at(k); }
};

/// Nodes closer than 1e-12 are identified; pairs in (1e-12, 1e-8) throw
/// NearConfluence. A block of m equal nodes uses f^(m-1)/(m-1)!.
DividedDifferenceTable divided_differences(const SchurFunction& f, const std::vector<Complex>& nodes);

/// [f(z_0), ..., f(z_m)] for a single node list.
Complex divided_difference(const SchurFunction& f, const std::vector<Complex>& nodes);

/// f(T) for upper-triangular T by summing over increasing index paths.
ComplexMatrix apply_to_triangular(const SchurFunction& f, const ComplexMatrix& t);

/// Schur triangularization, path sum, back-transform. Triangular input skips
/// the first step.
ComplexMatrix apply_function(const SchurFunction& f, const ComplexMatrix& m);

inline constexpr double kCommutatorTolerance = 1e-10;

/// p(T_1, ..., T_n) for pairwise commuting square matrices of one size.
/// Separable functions multiply f_i(T_i).
ComplexMatrix poly_eval_tuple(const MultiSchurFunction& p, const std::vector<ComplexMatrix>& tuple);

/// lhs ||f(T)||, rhs certified sup norm of f.
InequalityReport von_neumann_check(const SchurFunction& f, const ComplexMatrix& t,
                                   double tolerance = kDefaultTolerance);

/// Tuple form, restricted to 2x2 and 3x3 contractions.
InequalityReport von_neumann_check(const MultiSchurFunction& p, const std::vector<ComplexMatrix>& tuple,
                                   double tolerance = kDefaultTolerance);

} // namespace oplab
