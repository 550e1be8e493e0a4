#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oplab/contraction_criteria.hpp"
#include "oplab/functional_calculus.hpp"
#include "oplab/inequalities.hpp"
#include "oplab/model_operators.hpp"
#include "support/oracles.hpp"

using namespace oplab;

namespace {

double rho(Complex z, Complex w)
{
    return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
}

SchurFunction square()
{
    return SchurFunction::polynomial({0.0, 0.0, 1.0});
}

SchurFunction mobius(Complex a, double theta = 0.0)
{
    return SchurFunction::blaschke({a}, std::polar(1.0, theta));
}

std::vector<DiskPoint> separated_triple(Rng& rng, double radius = 0.9)
{
    for (;;) {
        std::vector<DiskPoint> w;
        for (int i = 0; i < 3; ++i) {
            w.emplace_back(rng.disk(radius));
        }
        if (std::abs(Complex(w[0]) - Complex(w[1])) > 1e-3 && std::abs(Complex(w[1]) - Complex(w[2])) > 1e-3 &&
            std::abs(Complex(w[0]) - Complex(w[2])) > 1e-3) {
            return w;
        }
    }
}

// g'(0) and g''(0) of a one-variable function by trapezoidal Cauchy integrals
// on |t| = r.
std::pair<Complex, Complex> cauchy_first_two(const std::function<Complex(Complex)>& g, double r = 0.3, int points = 512)
{
    Complex c1 = 0.0;
    Complex c2 = 0.0;
    for (int k = 0; k < points; ++k) {
        const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * k / points);
        const Complex v = g(r * u);
        c1 += v / u;
        c2 += v / (u * u);
    }
    c1 /= points * r;
    c2 /= points * r * r;
    return {c1, 2.0 * c2};
}

Complex moebius_to_zero(Complex c, Complex v)
{
    return (v - c) / (1.0 - std::conj(c) * v);
}

} // namespace

TEST(SchwarzPick, Examples)
{
    const auto r = schwarz_pick_two_point(square(), DiskPoint(0.3), DiskPoint(-0.4));
    EXPECT_NEAR(r.lhs, 0.07 / 0.9856, 1e-14);
    EXPECT_NEAR(r.lhs, 0.0710, 1e-4);
    EXPECT_NEAR(r.rhs, 0.625, 1e-15);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.equality);

    const auto c = schwarz_pick_two_point(SchurFunction::constant(0.4), DiskPoint(0.1), DiskPoint(0.7));
    EXPECT_EQ(c.lhs, 0.0);

    const auto a = schwarz_pick_two_point(mobius({0.3, -0.5}, 1.1), DiskPoint({0.2, 0.2}), DiskPoint(-0.6));
    EXPECT_TRUE(a.equality);
    EXPECT_NEAR(a.slack, 0.0, 1e-14);
}

TEST(SchwarzPick, DerivativeExamples)
{
    EXPECT_NEAR(schwarz_pick_derivative(square(), DiskPoint(0.5)).lhs, 0.8, 1e-15);
    EXPECT_TRUE(schwarz_pick_derivative(SchurFunction::identity(), DiskPoint({0.3, 0.4})).equality);
    EXPECT_EQ(schwarz_pick_derivative(SchurFunction::constant(0.2), DiskPoint(0.3)).lhs, 0.0);
}

TEST(SchwarzPick, RandomSweepHolds)
{
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const SchurFunction f = t % 2 ? sample_random_schur(100 + t, 1 + t % 6)
                                      : sample_random_polynomial(100 + t, 1 + t % 6);
        const DiskPoint a(rng.disk(0.95));
        const DiskPoint b(rng.disk(0.95));
        const auto r = schwarz_pick_two_point(f, a, b);
        EXPECT_NEAR(r.lhs, rho(f(a), f(b)), 1e-13);
        EXPECT_GE(r.slack, -1e-10);
        EXPECT_GE(schwarz_pick_derivative(f, a).slack, -1e-10);
    }
}

TEST(SchwarzPick, BoundaryValueIsRejected)
{
    try {
        schwarz_pick_two_point(SchurFunction::constant(1.0), DiskPoint(0.1), DiskPoint(0.2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Boundary);
    }
}

TEST(BeardonMinda, SquareTriple)
{
    const auto r = beardon_minda(square(), DiskPoint(0.3), DiskPoint(0.0), DiskPoint(-0.4));
    EXPECT_NEAR(r.lhs, 0.625, 1e-14);
    EXPECT_NEAR(r.rhs, 0.625, 1e-15);
    EXPECT_TRUE(r.equality);
}

TEST(BeardonMinda, AutomorphismsGiveEquality)
{
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const SchurFunction f = mobius(rng.disk(0.9), rng.uniform(0.0, 6.0));
        const auto w = separated_triple(rng);
        const auto r = beardon_minda(f, w[0], w[1], w[2]);
        EXPECT_TRUE(r.equality) << r.slack;
        EXPECT_EQ(r.context["form"], "cross-multiplied");
    }
}

TEST(BeardonMinda, DegreeTwoGivesEquality)
{
    Rng rng(6);
    for (int t = 0; t < 300; ++t) {
        const SchurFunction f = SchurFunction::blaschke({rng.disk(0.9), rng.disk(0.9)}, rng.unimodular());
        const auto w = separated_triple(rng, 0.8);
        const auto r = beardon_minda(f, w[0], w[1], w[2]);
        EXPECT_LE(std::abs(r.slack), 1e-8) << t;
    }
}

TEST(BeardonMinda, HigherDegreeHoldsWithSlack)
{
    Rng rng(7);
    int strict = 0;
    for (int t = 0; t < 500; ++t) {
        const SchurFunction f = sample_random_schur(700 + t, 5);
        const auto w = separated_triple(rng);
        const auto r = beardon_minda(f, w[0], w[1], w[2]);
        const Complex s1 = hyperbolic_divided_difference(f, w[0], w[1]);
        const Complex s3 = hyperbolic_divided_difference(f, w[2], w[1]);
        EXPECT_NEAR(r.lhs, rho(s1, s3), 1e-12);
        EXPECT_GE(r.slack, -1e-9);
        strict += r.slack > 1e-6;
    }
    EXPECT_GT(strict, 450);
}

TEST(BeardonMinda, CollidingValuesAreTrivial)
{
    const auto r = beardon_minda(square(), DiskPoint(0.5), DiskPoint(0.1), DiskPoint(-0.5));
    EXPECT_TRUE(r.context.value("trivial", false));
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(beardon_minda(SchurFunction::constant(0.3), DiskPoint(0.5), DiskPoint(0.1), DiskPoint(-0.2)).holds);
}

TEST(BeardonMinda, SeparationError)
{
    try {
        beardon_minda(square(), DiskPoint(0.3), DiskPoint(0.3 + 1e-10), DiskPoint(-0.4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Separation);
    }
}

TEST(BeardonMinda, ProofIdentities)
{
    EXPECT_LE(bm_proof_identity_check(square(), DiskPoint(0.3), DiskPoint(0.0), DiskPoint(-0.4)), 1e-12);
    EXPECT_LE(bm_proof_identity_check(mobius({0.2, 0.5}, 0.7), DiskPoint(0.3), DiskPoint({0.1, -0.6}),
                                      DiskPoint(-0.4)),
              1e-12);
    Rng rng(8);
    double worst = 0.0;
    for (int t = 0; t < 2000; ++t) {
        const SchurFunction f = t % 3 ? sample_random_schur(900 + t, 1 + t % 6)
                                      : sample_random_polynomial(900 + t, 1 + t % 6);
        const auto w = separated_triple(rng);
        worst = std::max(worst, bm_proof_identity_check(f, w[0], w[1], w[2]));
    }
    EXPECT_LE(worst, 1e-10);
}

// f(M) for the 3x3 model matrix on the three points is a contraction; its
// coupling slack is a positive multiple of rho(w1, w3)^2 - rho(f*_1, f*_3)^2.
TEST(BeardonMinda, MatrixBridge)
{
    Rng rng(9);
    for (int t = 0; t < 300; ++t) {
        const SchurFunction f = sample_random_schur(1300 + t, 1 + t % 6);
        const auto w = separated_triple(rng, 0.8);
        const Complex w1 = w[0];
        const Complex w2 = w[1];
        const Complex w3 = w[2];
        const ComplexMatrix ft = apply_function(f, model_matrix(w).matrix);
        const double beta = criterion_3x3(ft).slack("beta");

        const Complex f1 = f(w1);
        const Complex f2 = f(w2);
        const Complex f3 = f(w3);
        const Complex s1 = hyperbolic_divided_difference(f, w[0], w[1]);
        const Complex s3 = hyperbolic_divided_difference(f, w[2], w[1]);
        const double d2 = 1.0 - std::norm(f2);
        const double scale = std::norm(1.0 - std::conj(f2) * f1) * std::norm(1.0 - std::conj(f2) * f3) *
                             std::norm(1.0 - std::conj(w3) * w1) * std::norm(1.0 - std::conj(s3) * s1) /
                             (d2 * d2 * std::norm(w1 - w3));
        const double rw = rho(w1, w3);
        const double rs = rho(s1, s3);
        EXPECT_NEAR(beta, scale * (rw * rw - rs * rs), 1e-9 * std::max(1.0, scale)) << t;

        const auto r = beardon_minda(f, w[0], w[1], w[2]);
        EXPECT_EQ(r.holds, beta >= -1e-9);
        if (f.degree() <= 2) {
            EXPECT_NEAR(beta, 0.0, 1e-9);
        }
    }
}

TEST(BeardonMinda, DilationConverges)
{
    const SchurFunction f = sample_random_schur(31, 4);
    const DiskPoint w1(0.3);
    const DiskPoint w2({0.0, 0.4});
    const DiskPoint w3({-0.5, -0.1});
    const double limit = beardon_minda(f, w1, w2, w3).lhs;
    double previous = 1.0;
    for (double r : {0.9, 0.99, 0.999}) {
        const double gap = std::abs(beardon_minda(dilate(f, r), w1, w2, w3).lhs - limit);
        EXPECT_LT(gap, previous);
        previous = gap;
    }
    EXPECT_LT(previous, 1e-2);
}

TEST(Peschl, Examples)
{
    const auto id = peschl(SchurFunction::identity(), DiskPoint({0.3, -0.2}));
    EXPECT_NEAR(std::abs(id.d1 - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(id.d2), 0.0, 1e-14);
    const auto sq = peschl(square(), DiskPoint(0.0));
    EXPECT_EQ(sq.d1, Complex(0.0));
    EXPECT_EQ(sq.d2, Complex(2.0));
}

TEST(Peschl, MatchesComposedExpansion)
{
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        const SchurFunction f = t % 2 ? sample_random_schur(1500 + t, 1 + t % 6)
                                      : sample_random_polynomial(1500 + t, 1 + t % 6);
        const Complex w = rng.disk(0.9);
        const Complex c = f(w);
        const auto oracle = cauchy_first_two(
            [&](Complex z) { return moebius_to_zero(c, f((z + w) / (1.0 + std::conj(w) * z))); });
        const auto d = peschl(f, DiskPoint(w));
        EXPECT_LE(std::abs(d.d1 - oracle.first), 1e-7) << t;
        EXPECT_LE(std::abs(d.d2 - oracle.second), 1e-7) << t;
        const auto e = peschl_expansion(f, DiskPoint(w));
        EXPECT_LE(std::abs(d.d1 - e.d1), 1e-7);
        EXPECT_LE(std::abs(d.d2 - e.d2), 1e-7);
    }
}

TEST(Yamashita, Examples)
{
    const auto r = yamashita(square(), DiskPoint(0.0));
    EXPECT_DOUBLE_EQ(r.lhs, 2.0);
    EXPECT_DOUBLE_EQ(r.rhs, 2.0);
    EXPECT_TRUE(r.equality);
    EXPECT_FALSE(r.context["wirtinger"]["checked"].get<bool>());

    const auto m = yamashita(mobius({0.4, 0.1}, 2.0), DiskPoint({-0.2, 0.5}));
    EXPECT_TRUE(m.equality);
}

TEST(Yamashita, EqualityUpToDegreeTwo)
{
    Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        std::vector<Complex> zeros{rng.disk(0.9)};
        if (t % 2) {
            zeros.push_back(rng.disk(0.9));
        }
        const auto r = yamashita(SchurFunction::blaschke(zeros, rng.unimodular()), DiskPoint(rng.disk(0.9)));
        EXPECT_LE(std::abs(r.slack), 1e-8) << t;
    }
}

TEST(Yamashita, RandomHoldsAndWirtingerAgrees)
{
    Rng rng(14);
    int checked = 0;
    for (int t = 0; t < 500; ++t) {
        const SchurFunction f = t % 2 ? sample_random_schur(1900 + t, 4) : sample_random_polynomial(1900 + t, 4);
        const auto r = yamashita(f, DiskPoint(rng.disk(0.9)));
        EXPECT_GE(r.slack, -1e-9);
        const auto& w = r.context["wirtinger"];
        if (w["checked"].get<bool>()) {
            ++checked;
            EXPECT_TRUE(w["agrees"].get<bool>()) << w.dump();
        }
    }
    EXPECT_GT(checked, 400);
}

TEST(Polydisk, ProductAtOrigin)
{
    const auto f = MultiSchurFunction::polynomial(2, {{{1, 1}, 1.0}});
    const std::vector<Complex> b{{0.3, 0.2}, -0.6};
    const auto r = polydisk_schwarz_pick(f, {0.0, 0.0}, b);
    EXPECT_NEAR(r.lhs, std::abs(b[0] * b[1]), 1e-15);
    EXPECT_NEAR(r.rhs, 0.6, 1e-15);
    EXPECT_TRUE(r.holds);
}

TEST(Polydisk, OneVariableReduces)
{
    const SchurFunction g = sample_random_schur(41, 3);
    const auto f = MultiSchurFunction::separable({g, SchurFunction::constant(1.0)});
    const std::vector<Complex> a{{0.1, 0.5}, 0.3};
    const std::vector<Complex> b{-0.4, {0.2, -0.1}};
    const auto multi = polydisk_schwarz_pick(f, a, b);
    const auto single = schwarz_pick_two_point(g, DiskPoint(a[0]), DiskPoint(b[0]));
    EXPECT_NEAR(multi.lhs, single.lhs, 1e-14);
}

TEST(Polydisk, TwoPointTupleIsContractive)
{
    Rng rng(15);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + t % 3;
        std::vector<Complex> a(n);
        std::vector<Complex> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = rng.disk(0.9);
            b[i] = t % 4 == 0 && i == 0 ? a[i] : rng.disk(0.9);
        }
        const double d = polydisk_tuple_constant(a, b);
        for (const auto& m : polydisk_two_point_tuple(a, b)) {
            EXPECT_LE(oracle::power_iteration_norm(m), 1.0 + 1e-12);
            EXPECT_EQ(m(1, 0), Complex(0.0));
        }
        double expected = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) {
                expected = std::min(expected, std::sqrt((1.0 - std::norm(a[i])) * (1.0 - std::norm(b[i]))) /
                                                  std::abs(a[i] - b[i]));
            }
        }
        EXPECT_DOUBLE_EQ(d, expected);
    }
    EXPECT_THROW(polydisk_tuple_constant({0.1, 0.2}, {0.1, 0.2}), Error);
}

TEST(Polydisk, RandomSweepHolds)
{
    Rng rng(16);
    for (int t = 0; t < 200; ++t) {
        const MultiSchurFunction f = t % 2 ? sample_random_multi_polynomial(2100 + t, 2, 4)
                                           : sample_random_separable(2100 + t, 2, 3);
        const std::vector<Complex> a{rng.disk(0.9), rng.disk(0.9)};
        const std::vector<Complex> b{rng.disk(0.9), rng.disk(0.9)};
        const auto r = polydisk_schwarz_pick(f, a, b);
        EXPECT_GE(r.slack, -1e-10);
        EXPECT_LE(r.context["tuple_norm"].get<double>(), f.certified_sup_norm() * (1.0 + 1e-9) + 1e-12);
        const auto dr = polydisk_derivative(f, a);
        EXPECT_GE(dr.slack, -1e-10);
        EXPECT_LE(dr.context["tuple_norm"].get<double>(), f.certified_sup_norm() * (1.0 + 1e-9) + 1e-12);
    }
}

TEST(PolydiskDerivative, Examples)
{
    const auto mean = MultiSchurFunction::polynomial(2, {{{1, 0}, 0.5}, {{0, 1}, 0.5}});
    const auto r = polydisk_derivative(mean, {0.0, 0.0});
    EXPECT_DOUBLE_EQ(r.lhs, 1.0);
    EXPECT_DOUBLE_EQ(r.rhs, 1.0);
    EXPECT_TRUE(r.equality);
    const auto c = MultiSchurFunction::polynomial(2, {{{0, 0}, 0.5}});
    EXPECT_EQ(polydisk_derivative(c, {0.2, 0.1}).lhs, 0.0);
}

TEST(PeschlMulti, Examples)
{
    const auto mean = MultiSchurFunction::polynomial(2, {{{1, 0}, 0.5}, {{0, 1}, 0.5}});
    const auto d = peschl_multi(mean, {0.0, 0.0});
    EXPECT_NEAR(std::abs(d.d1 - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d.d2), 0.0, 1e-15);

    const auto prod = MultiSchurFunction::polynomial(2, {{{1, 1}, 1.0}});
    const auto r = peschl_multi_inequality(prod, {0.0, 0.0});
    EXPECT_DOUBLE_EQ(r.lhs, 2.0);
    EXPECT_DOUBLE_EQ(r.rhs, 2.0);
    EXPECT_TRUE(r.equality);

    const auto sq = MultiSchurFunction::polynomial(1, {{{2}, 1.0}});
    EXPECT_TRUE(peschl_multi_inequality(sq, {0.0}).equality);
}

TEST(PeschlMulti, OneVariableMatchesPeschl)
{
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        const SchurFunction g = sample_random_schur(2300 + t, 1 + t % 5);
        const Complex w = rng.disk(0.9);
        const auto a = peschl_multi(MultiSchurFunction::separable({g}), {w});
        const auto b = peschl(g, DiskPoint(w));
        EXPECT_LE(std::abs(a.d1 - b.d1), 1e-12);
        EXPECT_LE(std::abs(a.d2 - b.d2), 1e-10);
    }
}

TEST(PeschlMulti, MatchesDiagonalExpansion)
{
    Rng rng(18);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + t % 2;
        const MultiSchurFunction f = t % 2 ? sample_random_multi_polynomial(2500 + t, n, 3)
                                           : sample_random_separable(2500 + t, n, 2);
        std::vector<Complex> w(n);
        for (auto& z : w) {
            z = rng.disk(0.85);
        }
        const Complex c = f(w);
        const auto oracle = cauchy_first_two([&](Complex s) {
            std::vector<Complex> z(n);
            for (std::size_t j = 0; j < n; ++j) {
                z[j] = (s + w[j]) / (1.0 + std::conj(w[j]) * s);
            }
            return moebius_to_zero(c, f(z));
        });
        const auto d = peschl_multi(f, w);
        EXPECT_LE(std::abs(d.d1 - oracle.first), 1e-6) << t;
        EXPECT_LE(std::abs(d.d2 - oracle.second), 1e-6) << t;
        EXPECT_GE(peschl_multi_inequality(f, w).slack, -1e-8);
    }
}

TEST(PeschlMulti, SizeLimit)
{
    const auto f = MultiSchurFunction::polynomial(4, {{{1, 0, 0, 0}, 0.5}});
    EXPECT_THROW(peschl_multi(f, {0.0, 0.0, 0.0, 0.0}), Error);
}

TEST(Coefficients, MonomialIsWienerExtremal)
{
    for (int k = 1; k <= 5; ++k) {
        std::vector<Complex> c(static_cast<std::size_t>(k) + 1, 0.0);
        c.back() = 1.0;
        const auto reports = coefficient_inequalities(SchurFunction::polynomial(c), 1, k);
        ASSERT_EQ(reports.size(), 4U);
        EXPECT_EQ(reports[0].name, "wiener");
        EXPECT_TRUE(reports[0].equality);
        for (const auto& r : reports) {
            EXPECT_TRUE(r.holds) << r.name;
        }
    }
}

TEST(Coefficients, MobiusTwoIndexEquality)
{
    const auto f = SchurFunction::blaschke({-0.5});
    const auto reports = coefficient_inequalities(f, 1, 1);
    ASSERT_EQ(reports.size(), 3U);
    EXPECT_EQ(reports[1].name, "two-index");
    EXPECT_LE(std::abs(reports[1].lhs), 1e-12);
    EXPECT_LE(std::abs(reports[1].rhs), 1e-12);
    EXPECT_TRUE(reports[1].equality);
}

TEST(Coefficients, RandomBlaschkeSweep)
{
    for (int t = 0; t < 150; ++t) {
        const SchurFunction f = sample_random_schur(2700 + t, 1 + t % 8);
        const std::size_t count = 12;
        std::vector<Complex> a(count);
        for (std::size_t k = 0; k < count; ++k) {
            a[k] = oracle::cauchy_divided_difference([&](Complex z) { return f(z); },
                                                     std::vector<Complex>(k + 1, 0.0), 0.0, 0.5, 1024);
        }
        for (int n = 1; n < 10; ++n) {
            for (int k = 1; n + k <= 10; ++k) {
                const auto reports = coefficient_inequalities(f, n, k);
                EXPECT_NEAR(reports[0].lhs, std::abs(a[static_cast<std::size_t>(k)]), 1e-10);
                for (const auto& r : reports) {
                    EXPECT_GE(r.slack, -1e-10) << r.name << " n=" << n << " k=" << k;
                }
            }
        }
    }
}

TEST(Coefficients, RangeCheck)
{
    EXPECT_THROW(coefficient_inequalities(square(), 0, 1), Error);
    EXPECT_THROW(coefficient_inequalities(square(), 40, 30), Error);
}

TEST(Ruscheweyh, Examples)
{
    const auto id = ruscheweyh(SchurFunction::identity(), DiskPoint(0.0), 1);
    EXPECT_DOUBLE_EQ(id.lhs, 1.0);
    EXPECT_DOUBLE_EQ(id.rhs, 1.0);
    EXPECT_TRUE(id.equality);

    const SchurFunction f = sample_random_polynomial(51, 5);
    const auto r = ruscheweyh(f, DiskPoint(0.0), 1);
    const auto w = coefficient_inequalities(f, 1, 1)[0];
    EXPECT_NEAR(r.lhs, w.lhs, 1e-14);
    EXPECT_NEAR(r.rhs, w.rhs, 1e-14);
}

TEST(Ruscheweyh, RandomSweep)
{
    Rng rng(19);
    for (int t = 0; t < 400; ++t) {
        const SchurFunction f = sample_random_schur(2900 + t, 1 + t % 6);
        const int k = 1 + t % 3;
        const Complex z = rng.disk(0.9);
        const auto r = ruscheweyh(f, DiskPoint(z), k);
        const double fact = k == 3 ? 6.0 : k;
        EXPECT_NEAR(r.lhs, std::abs(derivative_cauchy(f, z, k, 0.5 * (1.0 - std::abs(z)))), 1e-8 * fact * (1.0 + r.lhs));
        EXPECT_GE(r.slack, -1e-10);
    }
    EXPECT_THROW(ruscheweyh(square(), DiskPoint(0.1), 5), Error);
}

TEST(Reports, JsonShape)
{
    const auto r = schwarz_pick_two_point(square(), DiskPoint(0.3), DiskPoint(-0.4));
    const auto j = to_json(r);
    for (const char* key : {"name", "lhs", "rhs", "slack", "holds", "equality", "context"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["name"], "schwarz-pick");
}
