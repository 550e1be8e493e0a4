#pragma once

#include <array>
#include <string>
#include <vector>

#include "oplab/linalg.hpp"

namespace oplab {

/// Minimal C0 with B = C0 A and ||C0|| <= c, built as B A^+. Throws
/// Infeasible when B*B <= c^2 A*A fails by more than the tolerance.
ComplexMatrix douglas_minimal(const ComplexMatrix& a, const ComplexMatrix& b, double c,
                              double tolerance = kDefaultTolerance);

/// Minimal V0 with A = V0 D_B, for a contractive column [A; B]. Throws StackNorm otherwise.
ComplexMatrix parrott_column_factor(const ComplexMatrix& a, const ComplexMatrix& b,
                                   double tolerance = kDefaultTolerance);

/// Minimal V0 with A = D_{B*} V0, for a contractive row [A B]. Throws RowNorm otherwise.
ComplexMatrix parrott_row_factor(const ComplexMatrix& a, const ComplexMatrix& b,
                                double tolerance = kDefaultTolerance);

/// Minimal W0 = P^+ X Q^+ for X = P W Q: among all solutions it is the one
/// supported on range(P) x range(Q), hence of least norm.
ComplexMatrix two_sided_minimal(const ComplexMatrix& p, const ComplexMatrix& x, const ComplexMatrix& q);

/// B = D_{Z0*} W D_{Y0} - Z0 C* Y0 with Z0, Y0 the minimal solutions of
/// A = Z D_C and D = D_{C*} Y. The completed [[A, B], [C, D]] is a contraction.
ComplexMatrix parrott_complete(const ComplexMatrix& a, const ComplexMatrix& c, const ComplexMatrix& d,
                               const ComplexMatrix& w, double tolerance = kDefaultTolerance);

struct ParrottWitness {
    ComplexMatrix y0;
    ComplexMatrix z0;
    ComplexMatrix w0;
    ComplexMatrix reconstructed_b;
};

/// Splits t as [[A, B], [C, D]] with A of size top_rows x left_cols and
/// recovers the minimal solutions. Throws NotContraction unless ||t|| <= 1 + tolerance.
ParrottWitness parrott_extract(const ComplexMatrix& t, std::size_t top_rows, std::size_t left_cols,
                               double tolerance = kDefaultTolerance);

inline constexpr double kBoundaryThreshold = 1e-9;
/// Inputs with | |omega_2| - 1 | inside this band are evaluated on both branches.
inline constexpr double kBranchOverlapBand = 1e-6;

struct ConditionSlack {
    std::string name;
    double slack = 0.0;
};

struct Criterion3x3Verdict {
    enum class Branch { Interior, Boundary };

    Branch branch = Branch::Interior;
    std::vector<ConditionSlack> conditions;
    bool is_contraction = false;
    /// Set when both branches were evaluated.
    bool near_threshold = false;
    bool branches_agree = true;

    double slack(const std::string& name) const;
    double worst_slack() const;
};

/// Contractivity of [[w1, a1, beta], [0, w2, a2], [0, 0, w3]] by the scalar
/// 3x3 criterion. Conditions: "diag-i" = 1 - |w_i|^2, "alpha-i" for the two
/// 2x2 compressions, and "beta" for the coupling condition. On the interior
/// branch the beta slack is reported divided by (1 - |w2|^2)^2:
///   (d1 - |a1|^2/d2)(d3 - |a2|^2/d2) - |beta + a1 a2 conj(w2)/d2|^2.
Criterion3x3Verdict criterion_3x3(Complex w1, Complex w2, Complex w3, Complex a1, Complex a2, Complex beta,
                                  double tolerance = kDefaultTolerance);

/// Same, reading the entries from an upper-triangular 3x3 matrix.
Criterion3x3Verdict criterion_3x3(const ComplexMatrix& t, double tolerance = kDefaultTolerance);

inline constexpr double kStrictnessMargin = 1e-8;

struct BlockCriterionVerdict {
    bool is_contraction = false;
    /// 1, 2 or 3 for the first equation without a contractive solution; 0 if none.
    int failing_equation = 0;
    std::array<ComplexMatrix, 3> witnesses;
    std::array<double, 3> witness_norms{};
    std::array<double, 3> reconstruction_errors{};
};

/// Decides contractivity of [[W1, A1, B], [0, W2, A2], [0, 0, W3]] by solving
/// A1 = D_{W1*} V1 D_{W2}, A2 = D_{W2*} V2 D_{W3} and
/// B = P V3 Q - D_{W1*} V1 W2* V2 D_{W3} with
/// P = [D_{W1*}(I - V1 V1*) D_{W1*}]^{1/2}, Q = [D_{W3}(I - V2* V2) D_{W3}]^{1/2}.
/// Throws Strictness when ||W2|| >= 1 - 1e-8.
BlockCriterionVerdict block_criterion_3x3(const ComplexMatrix& w1, const ComplexMatrix& w2, const ComplexMatrix& w3,
                                          const ComplexMatrix& a1, const ComplexMatrix& a2, const ComplexMatrix& b,
                                          double tolerance = kDefaultTolerance);

/// Block upper-triangular assembly [[W1, A1, B], [0, W2, A2], [0, 0, W3]].
ComplexMatrix assemble_block_3x3(const ComplexMatrix& w1, const ComplexMatrix& w2, const ComplexMatrix& w3,
                                 const ComplexMatrix& a1, const ComplexMatrix& a2, const ComplexMatrix& b);

} // namespace oplab
