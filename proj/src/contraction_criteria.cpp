#include "oplab/contraction_criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oplab {

namespace {

ComplexMatrix symmetrized(const ComplexMatrix& h)
{
    return 0.5 * (h + h.adjoint());
}

double reconstruction_tolerance(double tolerance, const ComplexMatrix& target)
{
    return std::max(1e-9, 100.0 * tolerance) * std::max(1.0, target.max_abs());
}

} // namespace

ComplexMatrix douglas_minimal(const ComplexMatrix& a, const ComplexMatrix& b, double c, double tolerance)
{
    if (a.cols() != b.cols()) {
        throw Error(ErrorKind::Size, "Douglas factorization needs A and B with equal column counts");
    }
    const ComplexMatrix gap = symmetrized((c * c) * (a.adjoint() * a) - b.adjoint() * b);
    const double lowest = hermitian_eigen(gap).values.front();
    if (lowest < -tolerance * std::max(1.0, gap.max_abs())) {
        throw Error(ErrorKind::Infeasible,
                    "B*B <= c^2 A*A fails; smallest eigenvalue of the gap is " + std::to_string(lowest));
    }
    return b * pseudo_inverse(a);
}

ComplexMatrix parrott_column_factor(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance)
{
    const double norm = operator_norm(vstack(a, b));
    if (norm > 1.0 + tolerance) {
        throw Error(ErrorKind::StackNorm, "column [A; B] has norm " + std::to_string(norm));
    }
    return a * pseudo_inverse(defect(b, tolerance));
}

ComplexMatrix parrott_row_factor(const ComplexMatrix& a, const ComplexMatrix& b, double tolerance)
{
    const double norm = operator_norm(hstack(a, b));
    if (norm > 1.0 + tolerance) {
        throw Error(ErrorKind::RowNorm, "row [A B] has norm " + std::to_string(norm));
    }
    return parrott_column_factor(a.adjoint(), b.adjoint(), tolerance).adjoint();
}

ComplexMatrix two_sided_minimal(const ComplexMatrix& p, const ComplexMatrix& x, const ComplexMatrix& q)
{
    return pseudo_inverse(p) * x * pseudo_inverse(q);
}

ComplexMatrix parrott_complete(const ComplexMatrix& a, const ComplexMatrix& c, const ComplexMatrix& d,
                               const ComplexMatrix& w, double tolerance)
{
    const ComplexMatrix z0 = parrott_column_factor(a, c, tolerance);
    const ComplexMatrix y0 = parrott_row_factor(d, c, tolerance);
    if (operator_norm(w) > 1.0 + tolerance) {
        throw Error(ErrorKind::NotContraction, "W must be a contraction");
    }
    return defect_adjoint(z0, tolerance) * w * defect(y0, tolerance) - z0 * c.adjoint() * y0;
}

ParrottWitness parrott_extract(const ComplexMatrix& t, std::size_t top_rows, std::size_t left_cols, double tolerance)
{
    if (top_rows == 0 || left_cols == 0 || top_rows >= t.rows() || left_cols >= t.cols()) {
        throw Error(ErrorKind::Size, "partition must leave four nonempty blocks");
    }
    const double norm = operator_norm(t);
    if (norm > 1.0 + tolerance) {
        throw Error(ErrorKind::NotContraction, "block matrix has norm " + std::to_string(norm));
    }
    const std::size_t bottom = t.rows() - top_rows;
    const std::size_t right = t.cols() - left_cols;
    const ComplexMatrix a = t.block(0, 0, top_rows, left_cols);
    const ComplexMatrix b = t.block(0, left_cols, top_rows, right);
    const ComplexMatrix c = t.block(top_rows, 0, bottom, left_cols);
    const ComplexMatrix d = t.block(top_rows, left_cols, bottom, right);

    ParrottWitness out;
    out.z0 = parrott_column_factor(a, c, tolerance);
    out.y0 = parrott_row_factor(d, c, tolerance);
    const ComplexMatrix dz = defect_adjoint(out.z0, tolerance);
    const ComplexMatrix dy = defect(out.y0, tolerance);
    const ComplexMatrix coupling = out.z0 * c.adjoint() * out.y0;
    out.w0 = two_sided_minimal(dz, b + coupling, dy);
    out.reconstructed_b = dz * out.w0 * dy - coupling;
    return out;
}

double Criterion3x3Verdict::slack(const std::string& name) const
{
    for (const auto& c : conditions) {
        if (c.name == name) {
            return c.slack;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "no condition named " + name);
}

double Criterion3x3Verdict::worst_slack() const
{
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& c : conditions) {
        worst = std::min(worst, c.slack);
    }
    return worst;
}

namespace {

std::vector<ConditionSlack> interior_conditions(Complex w1, Complex w2, Complex w3, Complex a1, Complex a2,
                                                Complex beta)
{
    const double d1 = 1.0 - std::norm(w1);
    const double d2 = 1.0 - std::norm(w2);
    const double d3 = 1.0 - std::norm(w3);
    const double s1 = d1 * d2 - std::norm(a1);
    const double s2 = d2 * d3 - std::norm(a2);
    // The coupling condition divided through by d2^2, so that it tends to the
    // boundary form d1 d3 - |beta|^2 as |w2| -> 1 with the alphas vanishing.
    const double u1 = d1 - std::norm(a1) / d2;
    const double u3 = d3 - std::norm(a2) / d2;
    const double coupling = u1 * u3 - std::norm(beta + a1 * a2 * std::conj(w2) / d2);
    return {{"diag-1", d1}, {"diag-2", d2}, {"diag-3", d3}, {"alpha-1", s1}, {"alpha-2", s2}, {"beta", coupling}};
}

std::vector<ConditionSlack> boundary_conditions(Complex w1, Complex w2, Complex w3, Complex a1, Complex a2,
                                                Complex beta)
{
    const double d1 = 1.0 - std::norm(w1);
    const double d3 = 1.0 - std::norm(w3);
    return {{"diag-1", d1},
            {"diag-2", 1.0 - std::norm(w2)},
            {"diag-3", d3},
            {"alpha-1", -std::norm(a1)},
            {"alpha-2", -std::norm(a2)},
            {"beta", d1 * d3 - std::norm(beta)}};
}

bool all_hold(const std::vector<ConditionSlack>& conditions, double tolerance)
{
    return std::all_of(conditions.begin(), conditions.end(),
                       [&](const ConditionSlack& c) { return c.slack >= -tolerance; });
}

} // namespace

Criterion3x3Verdict criterion_3x3(Complex w1, Complex w2, Complex w3, Complex a1, Complex a2, Complex beta,
                                  double tolerance)
{
    Criterion3x3Verdict v;
    const double m2 = std::abs(w2);
    v.branch = m2 < 1.0 - kBoundaryThreshold ? Criterion3x3Verdict::Branch::Interior
                                              : Criterion3x3Verdict::Branch::Boundary;
    const auto interior = interior_conditions(w1, w2, w3, a1, a2, beta);
    const auto boundary = boundary_conditions(w1, w2, w3, a1, a2, beta);
    v.conditions = v.branch == Criterion3x3Verdict::Branch::Interior ? interior : boundary;
    v.is_contraction = all_hold(v.conditions, tolerance);
    if (std::abs(m2 - 1.0) <= kBranchOverlapBand) {
        v.near_threshold = true;
        v.branches_agree = all_hold(interior, tolerance) == all_hold(boundary, tolerance);
    }
    return v;
}

Criterion3x3Verdict criterion_3x3(const ComplexMatrix& t, double tolerance)
{
    if (t.rows() != 3 || t.cols() != 3) {
        throw Error(ErrorKind::Size, "the scalar criterion needs a 3x3 matrix");
    }
    if (!t.is_upper_triangular()) {
        throw Error(ErrorKind::NonTriangular, "the scalar criterion needs an upper-triangular matrix");
    }
    return criterion_3x3(t(0, 0), t(1, 1), t(2, 2), t(0, 1), t(1, 2), t(0, 2), tolerance);
}

ComplexMatrix assemble_block_3x3(const ComplexMatrix& w1, const ComplexMatrix& w2, const ComplexMatrix& w3,
                                 const ComplexMatrix& a1, const ComplexMatrix& a2, const ComplexMatrix& b)
{
    const std::size_t n1 = w1.rows();
    const std::size_t n2 = w2.rows();
    const std::size_t n3 = w3.rows();
    if (!w1.is_square() || !w2.is_square() || !w3.is_square() || a1.rows() != n1 || a1.cols() != n2 ||
        a2.rows() != n2 || a2.cols() != n3 || b.rows() != n1 || b.cols() != n3) {
        throw Error(ErrorKind::Size, "inconsistent block sizes");
    }
    ComplexMatrix t(n1 + n2 + n3, n1 + n2 + n3);
    t.set_block(0, 0, w1);
    t.set_block(0, n1, a1);
    t.set_block(0, n1 + n2, b);
    t.set_block(n1, n1, w2);
    t.set_block(n1, n1 + n2, a2);
    t.set_block(n1 + n2, n1 + n2, w3);
    return t;
}

BlockCriterionVerdict block_criterion_3x3(const ComplexMatrix& w1, const ComplexMatrix& w2, const ComplexMatrix& w3,
                                          const ComplexMatrix& a1, const ComplexMatrix& a2, const ComplexMatrix& b,
                                          double tolerance)
{
    assemble_block_3x3(w1, w2, w3, a1, a2, b);
    for (const ComplexMatrix* w : {&w1, &w3}) {
        if (operator_norm(*w) > 1.0 + tolerance) {
            throw Error(ErrorKind::NotContraction, "diagonal blocks must be contractions");
        }
    }
    const double n2 = operator_norm(w2);
    if (n2 >= 1.0 - kStrictnessMargin) {
        throw Error(ErrorKind::Strictness, "central block needs norm below 1 - 1e-8, got " + std::to_string(n2));
    }

    BlockCriterionVerdict v;
    auto settle = [&](int index, const ComplexMatrix& target, const ComplexMatrix& rebuilt) {
        const auto k = static_cast<std::size_t>(index - 1);
        v.witness_norms[k] = operator_norm(v.witnesses[k]);
        v.reconstruction_errors[k] = (rebuilt - target).max_abs();
        const bool ok = v.witness_norms[k] <= 1.0 + tolerance &&
                        v.reconstruction_errors[k] <= reconstruction_tolerance(tolerance, target);
        if (!ok && v.failing_equation == 0) {
            v.failing_equation = index;
        }
        return ok;
    };

    const ComplexMatrix d1s = defect_adjoint(w1, tolerance);
    const ComplexMatrix d2 = defect(w2, tolerance);
    const ComplexMatrix d2s = defect_adjoint(w2, tolerance);
    const ComplexMatrix d3 = defect(w3, tolerance);

    v.witnesses[0] = two_sided_minimal(d1s, a1, d2);
    const bool ok1 = settle(1, a1, d1s * v.witnesses[0] * d2);
    v.witnesses[1] = two_sided_minimal(d2s, a2, d3);
    const bool ok2 = settle(2, a2, d2s * v.witnesses[1] * d3);
    if (!ok1 || !ok2) {
        v.witnesses[2] = ComplexMatrix(b.rows(), b.cols());
        return v;
    }

    const ComplexMatrix& v1 = v.witnesses[0];
    const ComplexMatrix& v2 = v.witnesses[1];
    const auto id1 = ComplexMatrix::identity(v1.rows());
    const auto id2 = ComplexMatrix::identity(v2.cols());
    const double clamp = 3.0 * tolerance + 1e-14;
    const ComplexMatrix p = hermitian_sqrt(symmetrized(d1s * (id1 - v1 * v1.adjoint()) * d1s), clamp);
    const ComplexMatrix q = hermitian_sqrt(symmetrized(d3 * (id2 - v2.adjoint() * v2) * d3), clamp);
    const ComplexMatrix coupling = d1s * v1 * w2.adjoint() * v2 * d3;
    const ComplexMatrix target = b + coupling;
    v.witnesses[2] = two_sided_minimal(p, target, q);
    const bool ok3 = settle(3, target, p * v.witnesses[2] * q);
    v.is_contraction = ok3;
    return v;
}

} // namespace oplab
