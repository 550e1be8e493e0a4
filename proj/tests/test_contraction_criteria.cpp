#include <gtest/gtest.h>

#include "oplab/contraction_criteria.hpp"
#include "support/oracles.hpp"

using namespace oplab;

namespace {

ComplexMatrix random_upper_3x3(Rng& rng)
{
    ComplexMatrix t(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            t(i, j) = rng.complex_normal();
        }
    }
    return t;
}

// Kernel of D_B contains w1 when B has w1 as a right singular vector with
// singular value 1; A is chosen to vanish there so the stack stays contractive.
struct DegenerateStack {
    ComplexMatrix a;
    ComplexMatrix b;
};

DegenerateStack degenerate_stack(Rng& rng)
{
    const ComplexMatrix ub = svd(oracle::random_matrix(rng, 3, 3)).u;
    const ComplexMatrix w = svd(oracle::random_matrix(rng, 3, 3)).u;
    const ComplexMatrix b = ub * ComplexMatrix::diagonal({1.0, 0.4, 0.2}) * w.adjoint();
    ComplexMatrix w1 = w.block(0, 0, 3, 1);
    const ComplexMatrix proj = ComplexMatrix::identity(3) - w1 * w1.adjoint();
    ComplexMatrix a = oracle::random_matrix(rng, 2, 3) * proj;
    // Shrink A until the stack is a contraction.
    while (oracle::power_iteration_norm(vstack(a, b)) > 1.0) {
        a *= 0.7;
    }
    return {a, b};
}

} // namespace

TEST(Douglas, Examples)
{
    Rng rng(41);
    const ComplexMatrix b = oracle::random_matrix(rng, 2, 3);
    EXPECT_LT(oracle::max_abs_diff(douglas_minimal(ComplexMatrix::identity(3), b, 10.0), b), 1e-14);
    EXPECT_EQ(douglas_minimal(oracle::random_matrix(rng, 3, 3), ComplexMatrix::zeros(2, 3), 1.0).max_abs(), 0.0);
    const ComplexMatrix a = oracle::random_matrix(rng, 3, 3);
    EXPECT_THROW(douglas_minimal(a, a, 0.5), Error);
}

TEST(Douglas, MinimalAmongAllSolutions)
{
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        // A is 4x2, so B = C A leaves C free on the 2-dimensional cokernel.
        const ComplexMatrix a = oracle::random_matrix(rng, 4, 2);
        const ComplexMatrix c = oracle::random_matrix(rng, 3, 4);
        const ComplexMatrix b = c * a;
        const double c_norm = oracle::power_iteration_norm(c);
        const ComplexMatrix c0 = douglas_minimal(a, b, c_norm * (1.0 + 1e-12));
        EXPECT_LT(oracle::max_abs_diff(c0 * a, b), 1e-10);
        const double c0_norm = oracle::power_iteration_norm(c0);
        EXPECT_LE(c0_norm, c_norm + 1e-10);
        // Alternative solutions C0 + K with K A = 0.
        const ComplexMatrix cokernel = ComplexMatrix::identity(4) - a * pseudo_inverse(a);
        for (int probe = 0; probe < 100; ++probe) {
            const ComplexMatrix k = oracle::random_matrix(rng, 3, 4, rng.uniform(0.0, 2.0)) * cokernel;
            EXPECT_LE(c0_norm, oracle::power_iteration_norm(c0 + k, 4000) + 1e-9);
        }
        // Kernel condition: C0 vanishes on range(A)-perp.
        EXPECT_LT((c0 * cokernel).max_abs(), 1e-10);
    }
}

TEST(ParrottColumn, Examples)
{
    Rng rng(43);
    const ComplexMatrix a = oracle::random_with_norm(rng, 2, 0.6);
    EXPECT_LT(oracle::max_abs_diff(parrott_column_factor(a, ComplexMatrix::zeros(2, 2)), a), 1e-14);
    EXPECT_EQ(parrott_column_factor(ComplexMatrix::zeros(2, 2), oracle::random_with_norm(rng, 2, 0.5)).max_abs(), 0.0);
    EXPECT_THROW(parrott_column_factor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), Error);
}

TEST(ParrottColumn, ReconstructionAndKernel)
{
    Rng rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix stack = oracle::random_with_norm(rng, 5, rng.uniform(0.3, 1.0)).block(0, 0, 5, 3);
        const ComplexMatrix a = stack.block(0, 0, 2, 3);
        const ComplexMatrix b = stack.block(2, 0, 3, 3);
        const ComplexMatrix v0 = parrott_column_factor(a, b);
        EXPECT_LT(oracle::max_abs_diff(v0 * defect(b), a), 1e-10);
        EXPECT_LE(oracle::power_iteration_norm(v0), 1.0 + 1e-10);
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = degenerate_stack(rng);
        const ComplexMatrix v0 = parrott_column_factor(s.a, s.b);
        const ComplexMatrix db = defect(s.b);
        EXPECT_LT(oracle::max_abs_diff(v0 * db, s.a), 1e-8);
        EXPECT_LT((v0 * kernel_projector(db, 1e-6)).max_abs(), 1e-10);
    }
}

TEST(ParrottRow, MirrorsColumnUnderAdjoint)
{
    Rng rng(45);
    const ComplexMatrix a = oracle::random_with_norm(rng, 2, 0.6);
    EXPECT_LT(oracle::max_abs_diff(parrott_row_factor(a, ComplexMatrix::zeros(2, 2)), a), 1e-14);
    EXPECT_EQ(parrott_row_factor(ComplexMatrix::zeros(2, 2), oracle::random_with_norm(rng, 2, 0.5)).max_abs(), 0.0);
    EXPECT_THROW(parrott_row_factor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), Error);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = degenerate_stack(rng);
        const ComplexMatrix v0 = parrott_row_factor(s.a.adjoint(), s.b.adjoint());
        const ComplexMatrix dbs = defect_adjoint(s.b.adjoint());
        EXPECT_LT(oracle::max_abs_diff(dbs * v0, s.a.adjoint()), 1e-8);
        EXPECT_LT((v0.adjoint() * kernel_projector(dbs, 1e-6)).max_abs(), 1e-10);
        EXPECT_LT(oracle::max_abs_diff(v0, parrott_column_factor(s.a, s.b).adjoint()), 1e-12);
    }
}

TEST(ParrottComplete, Examples)
{
    const auto zero = ComplexMatrix::zeros(2, 2);
    const ComplexMatrix b = parrott_complete(zero, zero, zero, ComplexMatrix::identity(2));
    EXPECT_LE(oracle::power_iteration_norm(block_matrix(zero, b, zero, zero)), 1.0 + 1e-12);

    const Complex w1(0.3, 0.4);
    const Complex w2(-0.5, 0.1);
    const ComplexMatrix scalar = parrott_complete(ComplexMatrix::scalar(w1), ComplexMatrix::scalar(0.0),
                                                  ComplexMatrix::scalar(w2), ComplexMatrix::scalar(1.0));
    EXPECT_NEAR(std::abs(scalar(0, 0) - std::sqrt(1.0 - std::norm(w1)) * std::sqrt(1.0 - std::norm(w2))), 0.0,
                1e-15);
}

TEST(ParrottComplete, CompletedBlockIsContraction)
{
    Rng rng(46);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix c = oracle::random_with_norm(rng, 2, rng.uniform(0.0, 0.95));
        ComplexMatrix a = oracle::random_matrix(rng, 2, 2);
        while (oracle::power_iteration_norm(vstack(a, c)) > 1.0) {
            a *= 0.8;
        }
        ComplexMatrix d = oracle::random_matrix(rng, 2, 2);
        while (oracle::power_iteration_norm(hstack(c, d)) > 1.0) {
            d *= 0.8;
        }
        const ComplexMatrix w = oracle::random_with_norm(rng, 2, rng.uniform(0.0, 1.0));
        const ComplexMatrix b = parrott_complete(a, c, d, w);
        EXPECT_LE(oracle::power_iteration_norm(block_matrix(a, b, c, d)), 1.0 + 1e-9);

        const auto witness = parrott_extract(block_matrix(a, b, c, d), 2, 2);
        const ComplexMatrix dz = defect_adjoint(witness.z0);
        const ComplexMatrix dy = defect(witness.y0);
        EXPECT_LT(oracle::max_abs_diff(dz * witness.w0 * dy, dz * w * dy), 1e-9);
        EXPECT_LT(oracle::max_abs_diff(witness.reconstructed_b, b), 1e-9);
        EXPECT_LE(oracle::power_iteration_norm(witness.w0), oracle::power_iteration_norm(w) + 1e-9);
    }
}

TEST(ParrottExtract, Examples)
{
    Rng rng(47);
    const ComplexMatrix c = oracle::random_with_norm(rng, 2, 0.5);
    const ComplexMatrix a = oracle::random_with_norm(rng, 2, 0.5);
    const ComplexMatrix d = oracle::random_with_norm(rng, 2, 0.5);
    const ComplexMatrix z0 = parrott_column_factor(a, c);
    const ComplexMatrix y0 = parrott_row_factor(d, c);
    const ComplexMatrix b = -(z0 * c.adjoint() * y0);
    EXPECT_LT(parrott_extract(block_matrix(a, b, c, d), 2, 2).w0.max_abs(), 1e-12);

    const Complex w1(0.2, -0.3);
    const Complex w2(0.6, 0.1);
    const Complex sat = std::sqrt(1.0 - std::norm(w1)) * std::sqrt(1.0 - std::norm(w2));
    const auto scalar = parrott_extract(ComplexMatrix{{w1, sat}, {0.0, w2}}, 1, 1);
    EXPECT_NEAR(std::abs(scalar.w0(0, 0)), 1.0, 1e-12);

    EXPECT_THROW(parrott_extract(ComplexMatrix::diagonal({2.0, 0.0}), 1, 1), Error);
}

TEST(ParrottExtract, MinimalNormAmongAlternatives)
{
    Rng rng(48);
    for (int trial = 0; trial < 30; ++trial) {
        // Rank-deficient defects: C has a unit singular value.
        const ComplexMatrix uc = svd(oracle::random_matrix(rng, 2, 2)).u;
        const ComplexMatrix vc = svd(oracle::random_matrix(rng, 2, 2)).u;
        const ComplexMatrix c = uc * ComplexMatrix::diagonal({1.0, 0.3}) * vc.adjoint();
        const ComplexMatrix a = oracle::random_with_norm(rng, 2, 0.3) *
                                (ComplexMatrix::identity(2) - vc.block(0, 0, 2, 1) * vc.block(0, 0, 2, 1).adjoint());
        const ComplexMatrix d = (ComplexMatrix::identity(2) - uc.block(0, 0, 2, 1) * uc.block(0, 0, 2, 1).adjoint()) *
                                oracle::random_with_norm(rng, 2, 0.3);
        const ComplexMatrix w = oracle::random_with_norm(rng, 2, 0.9);
        const ComplexMatrix b = parrott_complete(a, c, d, w);
        const auto witness = parrott_extract(block_matrix(a, b, c, d), 2, 2);
        const ComplexMatrix p = defect_adjoint(witness.z0);
        const ComplexMatrix q = defect(witness.y0);
        const ComplexMatrix pp = pseudo_inverse(p) * p;
        const ComplexMatrix qq = q * pseudo_inverse(q);
        const double w0_norm = oracle::power_iteration_norm(witness.w0);
        for (int probe = 0; probe < 50; ++probe) {
            const ComplexMatrix m = oracle::random_matrix(rng, 2, 2, rng.uniform(0.0, 1.0));
            const ComplexMatrix k = (ComplexMatrix::identity(2) - pp) * m + pp * m * (ComplexMatrix::identity(2) - qq);
            EXPECT_LT(oracle::max_abs_diff(p * k * q, ComplexMatrix::zeros(2, 2)), 1e-10);
            EXPECT_LE(w0_norm, oracle::power_iteration_norm(witness.w0 + k, 4000) + 1e-9);
        }
        // Kernel condition: W0* vanishes on range(P)-perp.
        EXPECT_LT((witness.w0.adjoint() * (ComplexMatrix::identity(2) - pp)).max_abs(), 1e-9);
    }
}

TEST(Criterion3x3, Examples)
{
    EXPECT_TRUE(criterion_3x3(0.0, 0.0, 0.0, 1.0, 1.0, 0.0).is_contraction);

    const auto v = criterion_3x3(0.0, 0.0, 0.0, 0.8, 0.8, 0.5);
    EXPECT_FALSE(v.is_contraction);
    EXPECT_NEAR(v.slack("beta"), 0.1296 - 0.25, 1e-15);
    EXPECT_GT(oracle::power_iteration_norm(ComplexMatrix{{0.0, 0.8, 0.5}, {0.0, 0.0, 0.8}, {0.0, 0.0, 0.0}}), 1.0);

    const Complex w1(0.3, 0.2);
    const Complex w2(-0.1, 0.5);
    const Complex w3(0.4, -0.4);
    const double r1 = std::sqrt(1.0 - std::norm(w1));
    const double r2 = std::sqrt(1.0 - std::norm(w2));
    const double r3 = std::sqrt(1.0 - std::norm(w3));
    const auto t3 = criterion_3x3(w1, w2, w3, r1 * r2, r2 * r3, -std::conj(w2) * r1 * r3);
    EXPECT_TRUE(t3.is_contraction);
    EXPECT_NEAR(t3.slack("beta"), 0.0, 1e-15);
    EXPECT_NEAR(t3.slack("alpha-1"), 0.0, 1e-15);

    const auto id = criterion_3x3(ComplexMatrix::identity(3));
    EXPECT_EQ(id.branch, Criterion3x3Verdict::Branch::Boundary);
    EXPECT_TRUE(id.is_contraction);
    EXPECT_THROW(criterion_3x3(ComplexMatrix{{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}), Error);
}

TEST(Criterion3x3, AgreesWithNormOracle)
{
    Rng rng(49);
    int checked = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        ComplexMatrix t = random_upper_3x3(rng);
        t = (rng.uniform(0.9, 1.1) / operator_norm(t)) * t;
        const double norm = oracle::power_iteration_norm(t);
        if (std::abs(norm - 1.0) < 1e-8) {
            continue;
        }
        ++checked;
        EXPECT_EQ(criterion_3x3(t).is_contraction, norm <= 1.0) << "norm " << norm;
    }
    EXPECT_GT(checked, 4900);
}

TEST(Criterion3x3, BoundaryOverlapAgreement)
{
    Rng rng(50);
    for (int trial = 0; trial < 2000; ++trial) {
        const Complex w1 = rng.disk(0.9);
        const Complex w3 = rng.disk(0.9);
        const double eps = std::pow(10.0, rng.uniform(-12.0, -6.5));
        const Complex w2 = std::polar(1.0 - eps, rng.uniform(0.0, 6.28));
        const double d2 = 1.0 - std::norm(w2);
        // Vanishing alphas per the boundary branch, at a rate faster than sqrt(d2).
        const Complex a1 = d2 * rng.disk(1.0);
        const Complex a2 = d2 * rng.disk(1.0);
        const double cap = std::sqrt((1.0 - std::norm(w1)) * (1.0 - std::norm(w3)));
        const double scale = rng.uniform(0.0, 1.0) < 0.5 ? 0.9 : 1.1;
        const Complex beta = std::polar(scale * cap, rng.uniform(0.0, 6.28));
        const auto v = criterion_3x3(w1, w2, w3, a1, a2, beta);
        EXPECT_TRUE(v.near_threshold);
        EXPECT_TRUE(v.branches_agree) << "eps " << eps;
        EXPECT_EQ(v.is_contraction, scale < 1.0);
    }
}

TEST(BlockCriterion, TrivialOffDiagonal)
{
    Rng rng(51);
    const ComplexMatrix w1 = oracle::random_with_norm(rng, 2, 1.0);
    const ComplexMatrix w2 = oracle::random_with_norm(rng, 2, 0.5);
    const ComplexMatrix w3 = oracle::random_with_norm(rng, 2, 0.9);
    const auto zero = ComplexMatrix::zeros(2, 2);
    const auto v = block_criterion_3x3(w1, w2, w3, zero, zero, zero);
    EXPECT_TRUE(v.is_contraction);
    for (const auto& witness : v.witnesses) {
        EXPECT_LT(witness.max_abs(), 1e-14);
    }
    EXPECT_THROW(block_criterion_3x3(w1, ComplexMatrix::identity(2), w3, zero, zero, zero), Error);
}

TEST(BlockCriterion, ScalarCrossValidation)
{
    Rng rng(52);
    int compared = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Complex w1 = rng.disk(1.0);
        const Complex w2 = rng.disk(0.98);
        const Complex w3 = rng.disk(1.0);
        ComplexMatrix t{{w1, rng.complex_normal(), rng.complex_normal()},
                        {0.0, w2, rng.complex_normal()},
                        {0.0, 0.0, w3}};
        const double s = rng.uniform(0.0, 1.0);
        t(0, 1) *= s;
        t(1, 2) *= s;
        t(0, 2) *= s * s;
        const double norm = operator_norm(t);
        if (std::abs(norm - 1.0) < 1e-6) {
            continue;
        }
        ++compared;
        const auto block = block_criterion_3x3(ComplexMatrix::scalar(w1), ComplexMatrix::scalar(w2),
                                               ComplexMatrix::scalar(w3), ComplexMatrix::scalar(t(0, 1)),
                                               ComplexMatrix::scalar(t(1, 2)), ComplexMatrix::scalar(t(0, 2)));
        const auto scalar = criterion_3x3(t);
        EXPECT_EQ(block.is_contraction, scalar.is_contraction) << "norm " << norm;
        EXPECT_EQ(block.is_contraction, norm <= 1.0);
    }
    EXPECT_GT(compared, 9000);
}

TEST(BlockCriterion, WitnessesReconstruct)
{
    Rng rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
        const ComplexMatrix w1 = oracle::random_with_norm(rng, n, rng.uniform(0.0, 1.0));
        const ComplexMatrix w2 = oracle::random_with_norm(rng, n, rng.uniform(0.0, 0.95));
        const ComplexMatrix w3 = oracle::random_with_norm(rng, n, rng.uniform(0.0, 1.0));
        const ComplexMatrix v1 = oracle::random_with_norm(rng, n, rng.uniform(0.0, 1.0));
        const ComplexMatrix v2 = oracle::random_with_norm(rng, n, rng.uniform(0.0, 1.0));
        const ComplexMatrix v3 = oracle::random_with_norm(rng, n, rng.uniform(0.0, 1.0));
        const ComplexMatrix d1s = defect_adjoint(w1);
        const ComplexMatrix d3 = defect(w3);
        const ComplexMatrix a1 = d1s * v1 * defect(w2);
        const ComplexMatrix a2 = defect_adjoint(w2) * v2 * d3;
        const ComplexMatrix p = hermitian_sqrt(d1s * (ComplexMatrix::identity(n) - v1 * v1.adjoint()) * d1s);
        const ComplexMatrix q = hermitian_sqrt(d3 * (ComplexMatrix::identity(n) - v2.adjoint() * v2) * d3);
        const ComplexMatrix b = p * v3 * q - d1s * v1 * w2.adjoint() * v2 * d3;

        const ComplexMatrix t = assemble_block_3x3(w1, w2, w3, a1, a2, b);
        EXPECT_LE(oracle::power_iteration_norm(t), 1.0 + 1e-9);
        const auto verdict = block_criterion_3x3(w1, w2, w3, a1, a2, b);
        ASSERT_TRUE(verdict.is_contraction) << verdict.failing_equation;
        const auto& w = verdict.witnesses;
        EXPECT_LT(oracle::max_abs_diff(d1s * w[0] * defect(w2), a1), 1e-9);
        EXPECT_LT(oracle::max_abs_diff(defect_adjoint(w2) * w[1] * d3, a2), 1e-9);
        const ComplexMatrix pw = hermitian_sqrt(d1s * (ComplexMatrix::identity(n) - w[0] * w[0].adjoint()) * d1s);
        const ComplexMatrix qw = hermitian_sqrt(d3 * (ComplexMatrix::identity(n) - w[1].adjoint() * w[1]) * d3);
        EXPECT_LT(oracle::max_abs_diff(pw * w[2] * qw - d1s * w[0] * w2.adjoint() * w[1] * d3, b), 1e-9);
        for (const auto& x : w) {
            EXPECT_LE(oracle::power_iteration_norm(x), 1.0 + 1e-9);
        }
    }
}

TEST(BlockCriterion, ReportsFailingEquation)
{
    const auto w = ComplexMatrix::scalar(0.0);
    EXPECT_EQ(block_criterion_3x3(w, w, w, ComplexMatrix::scalar(1.5), ComplexMatrix::scalar(0.1), w).failing_equation, 1);
    EXPECT_EQ(block_criterion_3x3(w, w, w, ComplexMatrix::scalar(0.1), ComplexMatrix::scalar(1.5), w).failing_equation, 2);
    EXPECT_EQ(block_criterion_3x3(w, w, w, ComplexMatrix::scalar(0.8), ComplexMatrix::scalar(0.8), ComplexMatrix::scalar(0.5))
                  .failing_equation,
              3);
}
