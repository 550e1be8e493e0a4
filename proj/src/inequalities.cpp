#include "oplab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oplab/functional_calculus.hpp"
#include "oplab/json_io.hpp"
#include "oplab/linalg.hpp"

namespace oplab {

namespace {

constexpr int kExpansionPoints = 256;
constexpr double kExpansionRadius = 0.5;
constexpr double kCollision = 1e-14;
constexpr double kUnimodular = 1e-10;

Complex interior_value(Complex v)
{
    if (!(std::abs(v) < 1.0 - 8.0 * std::numeric_limits<double>::epsilon())) {
        throw Error(ErrorKind::Boundary, "function value on or outside the unit circle, modulus " +
                                             std::to_string(std::abs(v)));
    }
    return v;
}

nlohmann::json points_json(const std::vector<Complex>& pts)
{
    nlohmann::json a = nlohmann::json::array();
    for (Complex z : pts) {
        a.push_back(complex_to_json(z));
    }
    return a;
}

void check_separated(const std::vector<Complex>& pts)
{
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(pts[i] - pts[j]) < kPointSeparation) {
                throw Error(ErrorKind::Separation, "points closer than 1e-8");
            }
        }
    }
}

void check_polydisk_point(const MultiSchurFunction& f, const std::vector<Complex>& z)
{
    if (z.size() != f.n_vars()) {
        throw Error(ErrorKind::Size, "point dimension does not match the number of variables");
    }
    for (Complex c : z) {
        if (!(std::abs(c) < 1.0)) {
            throw Error(ErrorKind::Boundary, "point outside the open polydisk");
        }
    }
}

double gamma_invariant(const SchurFunction& f, Complex z)
{
    const auto t = taylor_at(f, z, 1);
    return (1.0 - std::norm(z)) * std::abs(t[1]) / (1.0 - std::norm(t[0]));
}

// Peschl data from a Schur function h of one variable with h(0) = 0.
PeschlDerivatives expand_at_origin(const std::function<Complex(Complex)>& h)
{
    const auto c = taylor_coefficients_dft(h, 3, kExpansionRadius, kExpansionPoints);
    return {c[1], 2.0 * c[2]};
}

} // namespace

InequalityReport schwarz_pick_two_point(const SchurFunction& f, DiskPoint w1, DiskPoint w2, double tolerance)
{
    const Complex f1 = interior_value(f(w1));
    const Complex f2 = interior_value(f(w2));
    return make_report("schwarz-pick", pseudo_hyperbolic_distance(f1, f2), pseudo_hyperbolic_distance(w1, w2),
                       tolerance, {{"points", points_json({w1, w2})}, {"function", to_json(f)}});
}

InequalityReport schwarz_pick_derivative(const SchurFunction& f, DiskPoint w, double tolerance)
{
    interior_value(f(w));
    return make_report("schwarz-pick-derivative", gamma_invariant(f, w), 1.0, tolerance,
                       {{"point", complex_to_json(w)}, {"function", to_json(f)}});
}

InequalityReport beardon_minda(const SchurFunction& f, DiskPoint w1, DiskPoint w2, DiskPoint w3, double tolerance)
{
    check_separated({w1, w2, w3});
    const Complex f1 = interior_value(f(w1));
    const Complex f2 = interior_value(f(w2));
    const Complex f3 = interior_value(f(w3));
    const double rhs = pseudo_hyperbolic_distance(w1, w3);
    nlohmann::json context{{"points", points_json({w1, w2, w3})}, {"function", to_json(f)}};

    const double collision = std::min({std::abs(f1 - f2), std::abs(f2 - f3), std::abs(f1 - f3)});
    if (collision <= kCollision) {
        context["trivial"] = true;
        return make_report("beardon-minda", 0.0, rhs, tolerance, std::move(context));
    }

    const Complex s1 = hyperbolic_divided_difference(f, w1, w2);
    const Complex s3 = hyperbolic_divided_difference(f, w3, w2);
    context["f_star"] = points_json({s1, s3});
    if (1.0 - std::norm(s1) <= kUnimodular && 1.0 - std::norm(s3) <= kUnimodular) {
        context["form"] = "cross-multiplied";
        const double lhs = s_product(w1, w3) * std::norm(s1 - s3);
        const double cross = std::norm(Complex(w1) - Complex(w3)) * s_product(s1, s3);
        return make_report("beardon-minda", lhs, cross, tolerance, std::move(context));
    }
    context["form"] = "rho";
    return make_report("beardon-minda", pseudo_hyperbolic_distance(s1, s3), rhs, tolerance, std::move(context));
}

double bm_proof_identity_check(const SchurFunction& f, DiskPoint p1, DiskPoint p2, DiskPoint p3)
{
    check_separated({p1, p2, p3});
    const Complex w1 = p1;
    const Complex w2 = p2;
    const Complex w3 = p3;
    const Complex f1 = interior_value(f(w1));
    const Complex f2 = interior_value(f(w2));
    const Complex f3 = interior_value(f(w3));
    const Complex s1 = hyperbolic_divided_difference(f, p1, p2);
    const Complex s3 = hyperbolic_divided_difference(f, p3, p2);
    const double e2 = 1.0 - std::norm(w2);

    auto relative = [](Complex lhs, Complex rhs) {
        return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    };

    double worst = 0.0;
    for (auto [w, fw, s] : {std::tuple{w1, f1, s1}, std::tuple{w3, f3, s3}}) {
        const double c = s_product(fw, f2) - s_product(w, w2) * std::norm((fw - f2) / (w - w2));
        const double expected = std::norm(1.0 - std::conj(f2) * fw) * (1.0 - std::norm(s));
        worst = std::max(worst, relative(c, expected));
    }
    const Complex a = -std::conj(w2) * (f1 - f3) + e2 * ((f1 - f2) / (w1 - w2) - (f2 - f3) / (w2 - w3));
    const Complex b = std::conj(f2) * e2 * (w1 - w3) * (f1 - f2) * (f2 - f3) / ((w1 - w2) * (w2 - w3));
    const Complex lhs = (1.0 - std::norm(f2)) * a + b;
    const Complex rhs = (s1 - s3) * (1.0 - std::conj(f2) * f1) * (1.0 - std::conj(f2) * f3);
    return std::max(worst, relative(lhs, rhs));
}

PeschlDerivatives peschl(const SchurFunction& f, DiskPoint p)
{
    const Complex w = p;
    const auto t = taylor_at(f, w, 2);
    const Complex fw = interior_value(t[0]);
    const Complex d = t[1];
    const Complex dd = 2.0 * t[2];
    const double s = 1.0 - std::norm(w);
    const double e = 1.0 - std::norm(fw);
    return {s * d / e, s * s / e * (dd - 2.0 * std::conj(w) * d / s + 2.0 * std::conj(fw) * d * d / e)};
}

PeschlDerivatives peschl_expansion(const SchurFunction& f, DiskPoint p)
{
    const Complex w = p;
    const Complex c = interior_value(f(w));
    return expand_at_origin([&](Complex z) {
        const Complex v = f((z + w) / (1.0 + std::conj(w) * z));
        return (v - c) / (1.0 - std::conj(c) * v);
    });
}

InequalityReport yamashita(const SchurFunction& f, DiskPoint p, double tolerance)
{
    const PeschlDerivatives d = peschl(f, p);
    const Complex w = p;
    nlohmann::json check;
    if (std::abs(d.d1) < kCriticalPoint) {
        check = {{"checked", false}, {"reason", "critical point"}};
    } else {
        const double h = kWirtingerStep;
        const Complex i(0.0, 1.0);
        const double dx = (gamma_invariant(f, w + h) - gamma_invariant(f, w - h)) / (2.0 * h);
        const double dy = (gamma_invariant(f, w + i * h) - gamma_invariant(f, w - i * h)) / (2.0 * h);
        const double fd = std::abs(0.5 * Complex(dx, -dy));
        const double closed = std::abs(d.d2) / (2.0 * (1.0 - std::norm(w)));
        const double deviation = std::abs(fd - closed) / std::max(1.0, closed);
        check = {{"checked", true},
                 {"finite_difference", fd},
                 {"closed_form", closed},
                 {"deviation", deviation},
                 {"agrees", deviation <= kWirtingerAgreement}};
    }
    return make_report("yamashita", std::abs(d.d2), 2.0 * (1.0 - std::norm(d.d1)), tolerance,
                       {{"point", complex_to_json(w)},
                        {"function", to_json(f)},
                        {"d1", complex_to_json(d.d1)},
                        {"d2", complex_to_json(d.d2)},
                        {"wirtinger", check}});
}

double polydisk_tuple_constant(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    if (a.size() != b.size() || a.empty()) {
        throw Error(ErrorKind::Size, "points of different dimension");
    }
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            d = std::min(d, std::sqrt(s_product(a[i], b[i])) / std::abs(a[i] - b[i]));
        }
    }
    if (std::isinf(d)) {
        throw Error(ErrorKind::InvalidArgument, "two-point tuple needs a != b");
    }
    return d;
}

std::vector<ComplexMatrix> polydisk_two_point_tuple(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    const double d = polydisk_tuple_constant(a, b);
    std::vector<ComplexMatrix> t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        t.push_back(ComplexMatrix{{a[i], d * (a[i] - b[i])}, {0.0, b[i]}});
    }
    return t;
}

std::vector<ComplexMatrix> polydisk_derivative_tuple(const MultiSchurFunction& f, const std::vector<Complex>& a)
{
    check_polydisk_point(f, a);
    const auto g = gradient(f, a);
    std::vector<ComplexMatrix> t;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double theta = g[k] == Complex(0.0) ? 0.0 : -std::arg(g[k]);
        t.push_back(ComplexMatrix{{a[k], std::polar(1.0 - std::norm(a[k]), theta)}, {0.0, a[k]}});
    }
    return t;
}

InequalityReport polydisk_schwarz_pick(const MultiSchurFunction& f, const std::vector<Complex>& a,
                                       const std::vector<Complex>& b, double tolerance)
{
    check_polydisk_point(f, a);
    check_polydisk_point(f, b);
    const Complex fa = interior_value(f(a));
    const Complex fb = interior_value(f(b));
    double rhs = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        rhs = std::max(rhs, pseudo_hyperbolic_distance(a[i], b[i]));
    }
    nlohmann::json context{{"a", points_json(a)}, {"b", points_json(b)}, {"function", to_json(f)}};
    if (a != b) {
        context["d"] = polydisk_tuple_constant(a, b);
        context["tuple_norm"] = operator_norm(poly_eval_tuple(f, polydisk_two_point_tuple(a, b)));
    }
    return make_report("polydisk", pseudo_hyperbolic_distance(fa, fb), rhs, tolerance, std::move(context));
}

InequalityReport polydisk_derivative(const MultiSchurFunction& f, const std::vector<Complex>& a, double tolerance)
{
    check_polydisk_point(f, a);
    const Complex fa = interior_value(f(a));
    const auto g = gradient(f, a);
    double lhs = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        lhs += (1.0 - std::norm(a[i])) * std::abs(g[i]);
    }
    return make_report("polydisk-derivative", lhs, 1.0 - std::norm(fa), tolerance,
                       {{"point", points_json(a)},
                        {"function", to_json(f)},
                        {"tuple_norm", operator_norm(poly_eval_tuple(f, polydisk_derivative_tuple(f, a)))}});
}

PeschlDerivatives peschl_multi(const MultiSchurFunction& f, const std::vector<Complex>& w)
{
    check_polydisk_point(f, w);
    if (w.size() > 3) {
        throw Error(ErrorKind::Size, "several-variable Peschl derivatives are limited to n <= 3");
    }
    const Complex c = interior_value(f(w));
    const auto g = gradient(f, w);
    const auto h = hessian(f, w);
    const double e = 1.0 - std::norm(c);
    const std::size_t n = w.size();
    PeschlDerivatives d{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const double s = 1.0 - std::norm(w[j]);
        d.d1 += s * g[j] / e;
        d.d2 += s * s / e * (h[j][j] - 2.0 * std::conj(w[j]) * g[j] / s + 2.0 * std::conj(c) * g[j] * g[j] / e);
        for (std::size_t k = j + 1; k < n; ++k) {
            const double sk = 1.0 - std::norm(w[k]);
            d.d2 += 2.0 * s * sk / e * (h[j][k] + 2.0 * std::conj(c) * g[j] * g[k] / e);
        }
    }
    return d;
}

PeschlDerivatives peschl_multi_expansion(const MultiSchurFunction& f, const std::vector<Complex>& w)
{
    check_polydisk_point(f, w);
    const Complex c = interior_value(f(w));
    std::vector<Complex> z(w.size());
    return expand_at_origin([&](Complex t) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            z[j] = (t + w[j]) / (1.0 + std::conj(w[j]) * t);
        }
        const Complex v = f(z);
        return (v - c) / (1.0 - std::conj(c) * v);
    });
}

InequalityReport peschl_multi_inequality(const MultiSchurFunction& f, const std::vector<Complex>& w, double tolerance)
{
    const PeschlDerivatives d = peschl_multi(f, w);
    return make_report("peschl-multi", std::abs(d.d2), 2.0 * (1.0 - std::norm(d.d1)), tolerance,
                       {{"point", points_json(w)},
                        {"function", to_json(f)},
                        {"d1", complex_to_json(d.d1)},
                        {"d2", complex_to_json(d.d2)}});
}

std::vector<InequalityReport> coefficient_inequalities(const SchurFunction& f, int n, int k, double tolerance)
{
    if (n < 1 || k < 1 || n + k > 64) {
        throw Error(ErrorKind::InvalidArgument, "coefficient inequalities need n, k >= 1 and n + k <= 64");
    }
    const auto a = taylor_coefficients(f, static_cast<std::size_t>(std::max(n + k, 2 * n) + 1));
    const Complex a0 = a[0];
    const Complex an = a[static_cast<std::size_t>(n)];
    const Complex ak = a[static_cast<std::size_t>(k)];
    const Complex ank = a[static_cast<std::size_t>(n + k)];
    const Complex a2n = a[static_cast<std::size_t>(2 * n)];
    const double e = 1.0 - std::norm(a0);
    const nlohmann::json context{{"function", to_json(f)}, {"n", n}, {"k", k}};

    std::vector<InequalityReport> out;
    out.push_back(make_report("wiener", std::abs(ak), e, tolerance, context));
    out.push_back(make_report("two-index", std::norm(ank * e + an * ak * std::conj(a0)),
                              (e * e - std::norm(an)) * (e * e - std::norm(ak)), tolerance, context));
    const double improved = e > 0.0 ? std::abs(a2n * e + an * an * std::conj(a0)) / (2.0 * e) : 0.0;
    out.push_back(make_report("wiener-improved", improved, e - std::abs(an), tolerance, context));
    if (std::abs(a0) <= 1e-12) {
        out.push_back(make_report("two-index-centered", std::abs(ank),
                                  std::sqrt(std::max(0.0, 1.0 - std::norm(an))) *
                                      std::sqrt(std::max(0.0, 1.0 - std::norm(ak))),
                                  tolerance, context));
    }
    return out;
}

InequalityReport ruscheweyh(const SchurFunction& f, DiskPoint p, int k, double tolerance)
{
    if (k < 1 || k > 4) {
        throw Error(ErrorKind::InvalidArgument, "derivative order must be between 1 and 4");
    }
    const Complex z = p;
    const auto t = taylor_at(f, z, k);
    const Complex fz = interior_value(t[0]);
    double factorial = 1.0;
    for (int i = 2; i <= k; ++i) {
        factorial *= i;
    }
    const double r = std::abs(z);
    const double rhs = factorial * (1.0 - std::norm(fz)) / (std::pow(1.0 - r, k) * (1.0 + r));
    return make_report("ruscheweyh", factorial * std::abs(t[static_cast<std::size_t>(k)]), rhs, tolerance,
                       {{"point", complex_to_json(z)}, {"function", to_json(f)}, {"k", k}});
}

} // namespace oplab
