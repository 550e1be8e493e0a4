#include "oplab/sylvester.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oplab/contraction_criteria.hpp"
#include "oplab/functional_calculus.hpp"
#include "oplab/json_io.hpp"
#include "oplab/linalg.hpp"

namespace oplab {

namespace {

void check_block(const ComplexMatrix& m, const char* what)
{
    if (!m.is_square() || m.rows() > kMaxSylvesterBlock) {
        throw Error(ErrorKind::Size, std::string(what) + " must be square with at most 5 rows");
    }
}

void check_contraction(const ComplexMatrix& m, double tolerance, const char* what)
{
    const double n = operator_norm(m);
    if (n > 1.0 + tolerance) {
        throw Error(ErrorKind::NotContraction, std::string(what) + " has norm " + std::to_string(n));
    }
}

void check_gap(double gap)
{
    if (!(gap >= kMinSpectralGap)) {
        throw Error(ErrorKind::Gap, "spectral gap " + std::to_string(gap) + " below 1e-6");
    }
}

double reconstruction_tolerance(double tolerance, const ComplexMatrix& target)
{
    return std::max(1e-9, 100.0 * tolerance) * std::max(1.0, target.max_abs());
}

} // namespace

double spectral_gap(const ComplexMatrix& a, const ComplexMatrix& b)
{
    double gap = std::numeric_limits<double>::infinity();
    for (Complex x : spectrum(a)) {
        for (Complex y : spectrum(b)) {
            gap = std::min(gap, std::abs(x - y));
        }
    }
    return gap;
}

SylvesterProblem make_sylvester_problem(ComplexMatrix a, ComplexMatrix b, ComplexMatrix y)
{
    check_block(a, "A");
    check_block(b, "B");
    if (y.rows() != a.rows() || y.cols() != b.rows()) {
        throw Error(ErrorKind::Size, "Y must be rows(A) x rows(B)");
    }
    const double gap = spectral_gap(a, b);
    return {std::move(a), std::move(b), std::move(y), gap};
}

ComplexMatrix solve_sylvester(const SylvesterProblem& prob)
{
    check_gap(prob.spectral_gap);
    const std::size_t m = prob.a.rows();
    const std::size_t n = prob.b.rows();
    const std::size_t dim = m * n;
    // unknown index i + m j for X(i, j)
    std::vector<Complex> k(dim * dim);
    auto at = [&](std::size_t r, std::size_t c) -> Complex& { return k[r * dim + c]; };
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t row = i + m * j;
            for (std::size_t l = 0; l < m; ++l) {
                at(row, l + m * j) += prob.a(i, l);
            }
            for (std::size_t l = 0; l < n; ++l) {
                at(row, i + m * l) -= prob.b(l, j);
            }
        }
    }
    std::vector<Complex> rhs(dim);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            rhs[i + m * j] = prob.y(i, j);
        }
    }
    const auto sol = solve_linear_system(std::move(k), std::move(rhs), dim);
    ComplexMatrix x(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            x(i, j) = sol[i + m * j];
        }
    }
    return x;
}

Circle separating_circle(const SylvesterProblem& prob)
{
    check_gap(prob.spectral_gap);
    const auto sa = spectrum(prob.a);
    const auto sb = spectrum(prob.b);
    Complex center = 0.0;
    for (Complex z : sa) {
        center += z;
    }
    center /= static_cast<double>(sa.size());
    double ra = 0.0;
    for (Complex z : sa) {
        ra = std::max(ra, std::abs(z - center));
    }
    double db = std::numeric_limits<double>::infinity();
    for (Complex z : sb) {
        db = std::min(db, std::abs(z - center));
    }
    const double lo = ra + prob.spectral_gap / 4.0;
    const double hi = db - prob.spectral_gap / 4.0;
    if (!(lo < hi)) {
        throw Error(ErrorKind::Contour, "no circle about the centroid of spec(A) separates the spectra");
    }
    return {center, 0.5 * (lo + hi)};
}

ComplexMatrix solve_sylvester_contour(const SylvesterProblem& prob, int quad_points)
{
    if (quad_points < 1) {
        throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one point");
    }
    const Circle c = separating_circle(prob);
    const std::size_t m = prob.a.rows();
    const std::size_t n = prob.b.rows();
    const auto im = ComplexMatrix::identity(m);
    const auto in = ComplexMatrix::identity(n);
    ComplexMatrix sum(m, n);
    for (int k = 0; k < quad_points; ++k) {
        const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * k / quad_points);
        const Complex xi = c.center + c.radius * u;
        sum += (c.radius * u) * (inverse(prob.a - xi * im) * prob.y * inverse(prob.b - xi * in));
    }
    return (1.0 / quad_points) * sum;
}

OperatorSchwarzPickResult operator_schwarz_pick(const ComplexMatrix& w1, const ComplexMatrix& w2,
                                                const ComplexMatrix& v, const SchurFunction& f, double tolerance)
{
    check_block(w1, "W1");
    check_block(w2, "W2");
    check_contraction(w1, tolerance, "W1");
    check_contraction(w2, tolerance, "W2");
    check_contraction(v, tolerance, "V");

    OperatorSchwarzPickResult r;
    const ComplexMatrix c = defect_adjoint(w1, tolerance) * v * defect(w2, tolerance);
    r.x = solve_sylvester(make_sylvester_problem(w1, w2, c));
    const ComplexMatrix f1 = apply_function(f, w1);
    const ComplexMatrix f2 = apply_function(f, w2);
    r.m = f1 * r.x - r.x * f2;
    r.block_norm = operator_norm(block_matrix(f1, r.m, ComplexMatrix(f2.rows(), f1.cols()), f2));

    const ComplexMatrix p = defect_adjoint(f1, tolerance);
    const ComplexMatrix q = defect(f2, tolerance);
    r.y = two_sided_minimal(p, r.m, q);
    r.reconstruction_error = (p * r.y * q - r.m).max_abs();
    if (r.reconstruction_error > reconstruction_tolerance(tolerance, r.m)) {
        throw Error(ErrorKind::Infeasible,
                    "witness does not reconstruct f(W1)X - Xf(W2), error " + std::to_string(r.reconstruction_error));
    }
    r.report = make_report("operator-schwarz-pick", operator_norm(r.y), 1.0, tolerance,
                           {{"function", to_json(f)},
                            {"size", {w1.rows(), w2.rows()}},
                            {"block_norm", r.block_norm},
                            {"reconstruction_error", r.reconstruction_error}});
    return r;
}

OperatorBeardonMindaResult operator_beardon_minda(const ComplexMatrix& w1, const ComplexMatrix& w2,
                                                  const ComplexMatrix& w3, const ComplexMatrix& v1,
                                                  const ComplexMatrix& v2, const ComplexMatrix& v3,
                                                  const SchurFunction& f, double tolerance)
{
    check_block(w1, "W1");
    check_block(w2, "W2");
    check_block(w3, "W3");
    check_contraction(w1, tolerance, "W1");
    check_contraction(w3, tolerance, "W3");
    for (const ComplexMatrix* v : {&v1, &v2, &v3}) {
        check_contraction(*v, tolerance, "V");
    }
    const double n2 = operator_norm(w2);
    if (n2 >= 1.0 - kStrictnessMargin) {
        throw Error(ErrorKind::Strictness, "W2 needs norm below 1, got " + std::to_string(n2));
    }

    const ComplexMatrix d1s = defect_adjoint(w1, tolerance);
    const ComplexMatrix d2 = defect(w2, tolerance);
    const ComplexMatrix d2s = defect_adjoint(w2, tolerance);
    const ComplexMatrix d3 = defect(w3, tolerance);
    const auto id1 = ComplexMatrix::identity(w1.rows());
    const auto id3 = ComplexMatrix::identity(w3.rows());
    const double clamp = 3.0 * tolerance + 1e-14;
    const ComplexMatrix a1 = d1s * v1 * d2;
    const ComplexMatrix a2 = d2s * v2 * d3;
    const ComplexMatrix p = hermitian_sqrt(d1s * (id1 - v1 * v1.adjoint()) * d1s, clamp);
    const ComplexMatrix q = hermitian_sqrt(d3 * (id3 - v2.adjoint() * v2) * d3, clamp);
    const ComplexMatrix b = p * v3 * q - d1s * v1 * w2.adjoint() * v2 * d3;

    OperatorBeardonMindaResult r;
    r.t = assemble_block_3x3(w1, w2, w3, a1, a2, b);
    r.x[0] = solve_sylvester(make_sylvester_problem(w1, w2, a1));
    r.x[1] = solve_sylvester(make_sylvester_problem(w2, w3, a2));
    check_gap(spectral_gap(w1, w3));
    r.x[2] = solve_sylvester(make_sylvester_problem(w1, w3, b + r.x[0] * w2 * r.x[1] - r.x[0] * r.x[1] * w3));

    const ComplexMatrix f1 = apply_function(f, w1);
    const ComplexMatrix f2 = apply_function(f, w2);
    const ComplexMatrix f3 = apply_function(f, w3);
    const ComplexMatrix fa1 = f1 * r.x[0] - r.x[0] * f2;
    const ComplexMatrix fa2 = f2 * r.x[1] - r.x[1] * f3;
    const ComplexMatrix fb = f1 * r.x[2] - r.x[0] * f2 * r.x[1] + (r.x[0] * r.x[1] - r.x[2]) * f3;
    r.ft = assemble_block_3x3(f1, f2, f3, fa1, fa2, fb);
    if (r.t.rows() <= kMaxNodes) {
        r.factorization_error = (apply_function(f, r.t) - r.ft).max_abs();
    }

    const BlockCriterionVerdict v = block_criterion_3x3(f1, f2, f3, fa1, fa2, fb, tolerance);
    r.y = v.witnesses;
    r.witness_norms = v.witness_norms;
    r.reconstruction_errors = v.reconstruction_errors;
    double worst = 0.0;
    for (double n : v.witness_norms) {
        worst = std::max(worst, n);
    }
    if (!v.is_contraction && worst <= 1.0 + tolerance) {
        throw Error(ErrorKind::Infeasible,
                    "witness for equation " + std::to_string(v.failing_equation) + " does not reconstruct");
    }
    r.report = make_report("operator-beardon-minda", worst, 1.0, tolerance,
                           {{"function", to_json(f)},
                            {"size", {w1.rows(), w2.rows(), w3.rows()}},
                            {"ft_norm", operator_norm(r.ft)},
                            {"witness_norms", v.witness_norms},
                            {"reconstruction_errors", v.reconstruction_errors},
                            {"factorization_error", r.factorization_error},
                            {"failing_equation", v.failing_equation}});
    return r;
}

} // namespace oplab
