#include "oplab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

#include "oplab/contraction_criteria.hpp"
#include "oplab/functional_calculus.hpp"
#include "oplab/inequalities.hpp"
#include "oplab/json_io.hpp"
#include "oplab/linalg.hpp"
#include "oplab/model_operators.hpp"
#include "oplab/random.hpp"
#include "oplab/sylvester.hpp"

namespace oplab {

namespace {

constexpr std::size_t kKeptFailures = 20;
constexpr double kPointRadius = 0.95;
constexpr double kMinPointGap = 1e-3;

using Reports = std::vector<InequalityReport>;

// lhs is the observed deviation, rhs the contract it must stay under. These
// never count as equality cases.
InequalityReport bound_report(std::string name, double deviation, double bound, nlohmann::json context = {})
{
    auto r = make_report(std::move(name), deviation, bound, 0.0,
                         context.is_null() ? nlohmann::json::object() : std::move(context));
    r.equality = false;
    return r;
}

InequalityReport agreement_report(std::string name, bool agree, nlohmann::json context)
{
    auto r = make_report(std::move(name), agree ? 0.0 : 1.0, 0.0, 0.0, std::move(context));
    r.equality = false;
    return r;
}

std::size_t pick_degree(Rng& rng, int cap)
{
    return static_cast<std::size_t>(rng.integer(1, std::max(1, cap)));
}

SchurFunction random_schur(Rng& rng, int cap)
{
    const std::size_t d = pick_degree(rng, cap);
    return rng.integer(0, 3) == 0 ? sample_random_polynomial(rng.next(), d) : sample_random_schur(rng.next(), d);
}

MultiSchurFunction random_multi(Rng& rng, std::size_t n, int cap)
{
    const int d = std::min(std::max(1, cap), 4);
    if (rng.integer(0, 1) == 0) {
        return sample_random_multi_polynomial(rng.next(), n, rng.integer(1, d));
    }
    return sample_random_separable(rng.next(), n, d);
}

std::vector<DiskPoint> separated_points(Rng& rng, std::size_t count, double radius = kPointRadius)
{
    std::vector<DiskPoint> pts;
    while (pts.size() < count) {
        const Complex z = rng.disk(radius);
        const bool ok = std::all_of(pts.begin(), pts.end(),
                                    [&](const DiskPoint& w) { return std::abs(w.value() - z) > kMinPointGap; });
        if (ok) {
            pts.emplace_back(z);
        }
    }
    return pts;
}

std::vector<Complex> disk_vector(Rng& rng, std::size_t n, double radius = 0.9)
{
    std::vector<Complex> v(n);
    for (auto& z : v) {
        z = rng.disk(radius);
    }
    return v;
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols)
{
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rng.complex_normal();
        }
    }
    return m;
}

ComplexMatrix with_norm(const ComplexMatrix& m, double norm)
{
    const double current = operator_norm(m);
    return current == 0.0 ? m : (norm / current) * m;
}

ComplexMatrix random_contraction(Rng& rng, std::size_t rows, std::size_t cols, double lo = 0.0, double hi = 1.0)
{
    return with_norm(random_matrix(rng, rows, cols), rng.uniform(lo, hi));
}

// S diag(eig) S^{-1} with S a perturbation of the identity.
ComplexMatrix with_spectrum(Rng& rng, const std::vector<Complex>& eig)
{
    const std::size_t n = eig.size();
    const ComplexMatrix s = 0.3 * random_matrix(rng, n, n) + ComplexMatrix::identity(n);
    return s * ComplexMatrix::diagonal(eig) * inverse(s);
}

std::vector<ComplexMatrix> gapped_contractions(Rng& rng, const std::vector<std::size_t>& sizes, double min_gap)
{
    for (;;) {
        std::vector<ComplexMatrix> out;
        for (std::size_t n : sizes) {
            out.push_back(random_contraction(rng, n, n, 0.2, 1.0));
        }
        bool ok = true;
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                ok = ok && spectral_gap(out[i], out[j]) >= min_gap;
            }
        }
        if (ok) {
            return out;
        }
    }
}

double relative_residual(const SylvesterProblem& p, const ComplexMatrix& x)
{
    return (p.a * x - x * p.b - p.y).max_abs() / std::max(1.0, x.max_abs());
}

Reports schwarz_pick_trial(Rng& rng, double tol, int cap)
{
    const SchurFunction f = random_schur(rng, cap);
    const auto w = separated_points(rng, 2);
    return {schwarz_pick_two_point(f, w[0], w[1], tol)};
}

Reports schwarz_pick_derivative_trial(Rng& rng, double tol, int cap)
{
    const SchurFunction f = random_schur(rng, cap);
    return {schwarz_pick_derivative(f, DiskPoint(rng.disk(kPointRadius)), tol)};
}

Reports beardon_minda_trial(Rng& rng, double tol, int cap)
{
    const SchurFunction f = sample_random_schur(rng.next(), pick_degree(rng, cap));
    const auto w = separated_points(rng, 3, 0.9);
    Reports out{beardon_minda(f, w[0], w[1], w[2], tol)};
    if (f.degree() <= 2) {
        out.push_back(bound_report("beardon-minda-equality", std::abs(out[0].slack), kEqualityTolerance,
                                   {{"degree", f.degree()}}));
    }
    return out;
}

Reports bm_identity_trial(Rng& rng, double, int cap)
{
    const SchurFunction f = random_schur(rng, cap);
    const auto w = separated_points(rng, 3, 0.9);
    return {bound_report("bm-identity", bm_proof_identity_check(f, w[0], w[1], w[2]), 1e-10,
                         {{"function", to_json(f)}})};
}

Reports yamashita_trial(Rng& rng, double tol, int cap)
{
    const SchurFunction f = sample_random_schur(rng.next(), pick_degree(rng, cap));
    Reports out{yamashita(f, DiskPoint(rng.disk(0.9)), tol)};
    const auto& w = out[0].context["wirtinger"];
    if (w["checked"].get<bool>()) {
        out.push_back(bound_report("yamashita-wirtinger", w["deviation"].get<double>(), kWirtingerAgreement));
    }
    if (f.degree() <= 2) {
        out.push_back(bound_report("yamashita-equality", std::abs(out[0].slack), kEqualityTolerance,
                                   {{"degree", f.degree()}}));
    }
    return out;
}

Reports peschl_trial(Rng& rng, double tol, int cap)
{
    const SchurFunction f = random_schur(rng, cap);
    const DiskPoint w(rng.disk(0.9));
    const auto closed = peschl(f, w);
    const auto expanded = peschl_expansion(f, w);
    const double dev = std::max(std::abs(closed.d1 - expanded.d1), std::abs(closed.d2 - expanded.d2));
    return {bound_report("peschl-expansion", dev, 1e-7, {{"function", to_json(f)}, {"point", complex_to_json(w)}}),
            make_report("peschl-d1", std::abs(closed.d1), 1.0, tol)};
}

Reports criterion_trial(Rng& rng, double tol, int)
{
    ComplexMatrix t(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            t(i, j) = rng.complex_normal();
        }
    }
    t = with_norm(t, rng.uniform(0.9, 1.1));
    const double norm = operator_norm(t);
    nlohmann::json context{{"matrix", matrix_to_json(t)}, {"norm", norm}};
    if (std::abs(norm - 1.0) < 1e-8) {
        context["skipped"] = "norm within 1e-8 of 1";
        return {agreement_report("criterion-3x3", true, std::move(context))};
    }
    const auto v = criterion_3x3(t, tol);
    context["criterion"] = v.is_contraction;
    return {agreement_report("criterion-3x3", v.is_contraction == (norm <= 1.0), std::move(context))};
}

Reports parrott_trial(Rng& rng, double tol, int)
{
    const auto rows = static_cast<std::size_t>(rng.integer(2, 5));
    const auto cols = static_cast<std::size_t>(rng.integer(2, 5));
    const ComplexMatrix t = random_contraction(rng, rows, cols, 0.3, 1.0);
    const auto top = static_cast<std::size_t>(rng.integer(1, static_cast<int>(rows) - 1));
    const auto left = static_cast<std::size_t>(rng.integer(1, static_cast<int>(cols) - 1));
    const auto w = parrott_extract(t, top, left, tol);
    const double witness = std::max({operator_norm(w.y0), operator_norm(w.z0), operator_norm(w.w0)});
    const ComplexMatrix b = t.block(0, left, top, cols - left);
    const nlohmann::json context{{"matrix", matrix_to_json(t)}, {"top_rows", top}, {"left_cols", left}};
    return {make_report("parrott", witness, 1.0, tol, context),
            bound_report("parrott-reconstruction", (w.reconstructed_b - b).max_abs(), 1e-8, context)};
}

Reports von_neumann_trial(Rng& rng, double tol, int cap)
{
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const ComplexMatrix t = random_contraction(rng, n, n);
    const SchurFunction f = sample_random_schur(rng.next(), pick_degree(rng, cap));
    return {von_neumann_check(f, t, tol)};
}

Reports von_neumann_tuple_trial(Rng& rng, double tol, int cap)
{
    const auto size = static_cast<std::size_t>(rng.integer(2, 3));
    const auto n = static_cast<std::size_t>(rng.integer(2, 3));
    const ComplexMatrix s = random_matrix(rng, size, size) + 2.0 * ComplexMatrix::identity(size);
    const ComplexMatrix s_inv = inverse(s);
    std::vector<ComplexMatrix> tuple;
    for (std::size_t k = 0; k < n; ++k) {
        tuple.push_back(with_norm(s * ComplexMatrix::diagonal(disk_vector(rng, size, 1.0)) * s_inv,
                                  rng.uniform(0.5, 1.0)));
    }
    const MultiSchurFunction p = random_multi(rng, n, cap);
    auto r = von_neumann_check(p, tuple, tol);
    return {make_report("von-neumann-tuple", r.lhs, r.rhs * (1.0 + 1e-9), tol, r.context)};
}

Reports sylvester_trial(Rng& rng, double, int)
{
    const auto m = static_cast<std::size_t>(rng.integer(1, 4));
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    if (rng.integer(0, 1) == 0) {
        const auto prob = make_sylvester_problem(0.3 * random_matrix(rng, m, m),
                                                 0.3 * random_matrix(rng, n, n) + 2.0 * ComplexMatrix::identity(n),
                                                 random_matrix(rng, m, n));
        return {bound_report("sylvester-residual", relative_residual(prob, solve_sylvester(prob)), 1e-10,
                             {{"gap", prob.spectral_gap}})};
    }
    const Complex shift = rng.disk(0.5);
    std::vector<Complex> ea(m);
    std::vector<Complex> eb(n);
    for (auto& z : ea) {
        z = shift + rng.disk(0.3);
    }
    for (auto& z : eb) {
        z = shift + std::polar(rng.uniform(0.9, 1.3), rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    const auto prob =
        make_sylvester_problem(with_spectrum(rng, ea), with_spectrum(rng, eb), random_matrix(rng, m, n));
    const ComplexMatrix x = solve_sylvester(prob);
    Reports out{bound_report("sylvester-residual", relative_residual(prob, x), 1e-10, {{"gap", prob.spectral_gap}})};
    if (prob.spectral_gap >= 0.3) {
        const double diff = (solve_sylvester_contour(prob) - x).max_abs() / std::max(1.0, x.max_abs());
        out.push_back(bound_report("sylvester-contour", diff, 1e-6, {{"gap", prob.spectral_gap}}));
    }
    return out;
}

Reports operator_schwarz_pick_trial(Rng& rng, double tol, int cap)
{
    if (rng.integer(0, 3) == 0) {
        const auto w = separated_points(rng, 2);
        const SchurFunction f = sample_random_schur(rng.next(), pick_degree(rng, cap));
        const auto r = operator_schwarz_pick(ComplexMatrix::scalar(w[0]), ComplexMatrix::scalar(w[1]),
                                             ComplexMatrix::scalar(1.0), f, tol);
        const double rf = pseudo_hyperbolic_distance(f(w[0]), f(w[1]));
        const double rw = pseudo_hyperbolic_distance(w[0], w[1]);
        const double predicted = std::sqrt((rf * rf / (1.0 - rf * rf)) / (rw * rw / (1.0 - rw * rw)));
        const auto scalar = schwarz_pick_two_point(f, w[0], w[1], tol);
        return {r.report,
                bound_report("operator-schwarz-pick-scalar",
                             std::abs(r.report.lhs - predicted) / std::max(1.0, predicted), 1e-9),
                agreement_report("operator-schwarz-pick-verdict", r.report.holds == scalar.holds,
                                 {{"operator", r.report.holds}, {"scalar", scalar.holds}})};
    }
    const auto n1 = static_cast<std::size_t>(rng.integer(1, 3));
    const auto n2 = static_cast<std::size_t>(rng.integer(1, 3));
    const auto w = gapped_contractions(rng, {n1, n2}, 1e-2);
    const ComplexMatrix v = random_contraction(rng, n1, n2);
    const SchurFunction f = sample_random_schur(rng.next(), pick_degree(rng, cap));
    const auto r = operator_schwarz_pick(w[0], w[1], v, f, tol);
    return {r.report, bound_report("operator-schwarz-pick-reconstruction", r.reconstruction_error, 1e-8)};
}

Reports operator_beardon_minda_trial(Rng& rng, double tol, int cap)
{
    const bool scalar = rng.integer(0, 3) == 0;
    std::vector<std::size_t> sizes(3, 1);
    if (!scalar) {
        for (auto& s : sizes) {
            s = static_cast<std::size_t>(rng.integer(1, 2));
        }
    }
    std::vector<ComplexMatrix> w;
    for (;;) {
        w = gapped_contractions(rng, sizes, 1e-2);
        w[1] = with_norm(w[1], rng.uniform(0.1, 0.9));
        if (spectral_gap(w[0], w[1]) >= 1e-2 && spectral_gap(w[1], w[2]) >= 1e-2) {
            break;
        }
    }
    const ComplexMatrix v1 = random_contraction(rng, sizes[0], sizes[1]);
    const ComplexMatrix v2 = random_contraction(rng, sizes[1], sizes[2]);
    const ComplexMatrix v3 = random_contraction(rng, sizes[0], sizes[2]);
    const SchurFunction f = sample_random_schur(rng.next(), pick_degree(rng, cap));
    const auto r = operator_beardon_minda(w[0], w[1], w[2], v1, v2, v3, f, tol);
    const double recon = std::max({r.reconstruction_errors[0], r.reconstruction_errors[1],
                                   r.reconstruction_errors[2], r.factorization_error});
    Reports out{r.report, bound_report("operator-beardon-minda-reconstruction", recon, 1e-8)};
    if (scalar) {
        const auto s = beardon_minda(f, DiskPoint(w[0](0, 0)), DiskPoint(w[1](0, 0)), DiskPoint(w[2](0, 0)), tol);
        out.push_back(agreement_report("operator-beardon-minda-verdict", r.report.holds == s.holds,
                                       {{"operator", r.report.holds}, {"scalar", s.holds}}));
    }
    return out;
}

Reports polydisk_trial(Rng& rng, double tol, int cap)
{
    const auto n = static_cast<std::size_t>(rng.integer(2, 4));
    const MultiSchurFunction f = random_multi(rng, n, n == 2 ? cap : std::min(cap, 3));
    return {polydisk_schwarz_pick(f, disk_vector(rng, n), disk_vector(rng, n), tol)};
}

Reports polydisk_derivative_trial(Rng& rng, double tol, int cap)
{
    const auto n = static_cast<std::size_t>(rng.integer(2, 4));
    const MultiSchurFunction f = random_multi(rng, n, n == 2 ? cap : std::min(cap, 3));
    return {polydisk_derivative(f, disk_vector(rng, n), tol)};
}

Reports peschl_multi_trial(Rng& rng, double tol, int cap)
{
    const auto n = static_cast<std::size_t>(rng.integer(2, 3));
    const MultiSchurFunction f = random_multi(rng, n, n == 2 ? cap : std::min(cap, 3));
    const auto w = disk_vector(rng, n, 0.85);
    const auto closed = peschl_multi(f, w);
    const auto expanded = peschl_multi_expansion(f, w);
    const double dev = std::max(std::abs(closed.d1 - expanded.d1), std::abs(closed.d2 - expanded.d2));
    return {peschl_multi_inequality(f, w, tol), bound_report("peschl-multi-expansion", dev, 1e-6)};
}

Reports coefficients_trial(Rng& rng, double tol, int cap)
{
    const SchurFunction f = sample_random_schur(rng.next(), pick_degree(rng, cap));
    Reports out;
    for (int n = 1; n < 10; ++n) {
        for (int k = 1; n + k <= 10; ++k) {
            for (auto& r : coefficient_inequalities(f, n, k, tol)) {
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

Reports ruscheweyh_trial(Rng& rng, double tol, int cap)
{
    const SchurFunction f = random_schur(rng, cap);
    return {ruscheweyh(f, DiskPoint(rng.disk(0.9)), rng.integer(1, 4), tol)};
}

Reports model_operator_trial(Rng& rng, double tol, int cap)
{
    const auto n = static_cast<std::size_t>(rng.integer(1, std::clamp(cap, 1, static_cast<int>(kMaxModelSize))));
    const auto zeros = separated_points(rng, n);
    const ModelOperator m = model_matrix(zeros);
    std::vector<Complex> z(zeros.begin(), zeros.end());
    const ComplexMatrix theta = apply_to_triangular(SchurFunction::blaschke(z, rng.unimodular()), m.matrix);

    constexpr int points = 2048;
    constexpr double circle = 1.0 - 1e-13;
    ComplexMatrix gram(n, n);
    std::vector<Complex> phi(n);
    for (int k = 0; k < points; ++k) {
        const Complex zeta = std::polar(circle, 2.0 * std::numbers::pi * k / points);
        for (std::size_t i = 0; i < n; ++i) {
            phi[i] = tm_basis_eval(zeros, i + 1, zeta);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                gram(i, j) += phi[j] * std::conj(phi[i]);
            }
        }
    }
    gram = (1.0 / points) * gram;
    const nlohmann::json context{{"zeros", [&] {
                                      nlohmann::json a = nlohmann::json::array();
                                      for (Complex c : z) {
                                          a.push_back(complex_to_json(c));
                                      }
                                      return a;
                                  }()}};
    return {make_report("model-operator-norm", operator_norm(m.matrix), 1.0, tol, context),
            bound_report("model-operator-annihilation", theta.max_abs(), 1e-8, context),
            bound_report("model-operator-gram", (gram - ComplexMatrix::identity(n)).max_abs(), 1e-6, context)};
}

using TrialFn = Reports (*)(Rng&, double, int);

const std::map<std::string, TrialFn>& registry()
{
    static const std::map<std::string, TrialFn> r{
        {"schwarz-pick", schwarz_pick_trial},
        {"schwarz-pick-derivative", schwarz_pick_derivative_trial},
        {"beardon-minda", beardon_minda_trial},
        {"bm-identity", bm_identity_trial},
        {"yamashita", yamashita_trial},
        {"peschl", peschl_trial},
        {"criterion-3x3", criterion_trial},
        {"parrott", parrott_trial},
        {"von-neumann", von_neumann_trial},
        {"von-neumann-tuple", von_neumann_tuple_trial},
        {"sylvester", sylvester_trial},
        {"operator-schwarz-pick", operator_schwarz_pick_trial},
        {"operator-beardon-minda", operator_beardon_minda_trial},
        {"polydisk", polydisk_trial},
        {"polydisk-derivative", polydisk_derivative_trial},
        {"peschl-multi", peschl_multi_trial},
        {"coefficients", coefficients_trial},
        {"ruscheweyh", ruscheweyh_trial},
        {"model-operator", model_operator_trial},
    };
    return r;
}

nlohmann::json real_or_null(double x)
{
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "schwarz-pick",   "schwarz-pick-derivative", "beardon-minda",        "bm-identity",
        "yamashita",      "peschl",                  "criterion-3x3",        "parrott",
        "von-neumann",    "von-neumann-tuple",       "sylvester",            "operator-schwarz-pick",
        "operator-beardon-minda", "polydisk",        "polydisk-derivative",  "peschl-multi",
        "coefficients",   "ruscheweyh",              "model-operator",
    };
    return names;
}

bool is_suite(const std::string& name)
{
    return registry().contains(name);
}

std::vector<InequalityReport> run_trial(const std::string& suite, std::uint64_t seed, double tolerance,
                                        int degree_cap)
{
    const auto it = registry().find(suite);
    if (it == registry().end()) {
        throw Error(ErrorKind::UnknownSuite, "unknown suite '" + suite + "'");
    }
    Rng rng(seed);
    try {
        return it->second(rng, tolerance, degree_cap);
    } catch (const Error& e) {
        auto r = error_report(suite, std::string(to_string(e.kind())) + ": " + e.what());
        r.context["seed"] = seed;
        return {r};
    }
}

unsigned worker_threads()
{
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("OPLAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            n = static_cast<unsigned>(v);
        }
    }
    return n;
}

SuiteSummary run_suite(const SuiteConfig& config)
{
    if (!is_suite(config.suite)) {
        throw Error(ErrorKind::UnknownSuite, "unknown suite '" + config.suite + "'");
    }
    if (config.trials < 1) {
        throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
    }
    if (!(config.tolerance > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<Reports> results(config.trials);
    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(worker_threads(), config.trials));
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t i = next++; i < config.trials; i = next++) {
            results[i] = run_trial(config.suite, trial_seed(config.seed, i), config.tolerance, config.degree_cap);
            for (auto& r : results[i]) {
                r.context["trial"] = i;
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work);
        }
    }

    SuiteSummary s;
    s.config = config;
    s.threads = threads;
    s.trials_run = config.trials;
    s.worst_slack = std::numeric_limits<double>::infinity();
    for (auto& trial : results) {
        for (auto& r : trial) {
            ++s.reports_checked;
            if (std::isfinite(r.slack)) {
                s.worst_slack = std::min(s.worst_slack, r.slack);
            }
            s.equality_hits += r.equality;
            if (!r.holds) {
                ++s.failures;
                if (s.failing_reports.size() < kKeptFailures) {
                    s.failing_reports.push_back(r);
                }
            }
            if (config.keep_reports) {
                s.reports.push_back(std::move(r));
            }
        }
    }
    s.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (config.output_path) {
        write_json_file(*config.output_path, summary_to_json(s));
    }
    return s;
}

nlohmann::json deterministic_json(const SuiteSummary& s)
{
    nlohmann::json j{{"suite", s.config.suite},
                     {"config",
                      {{"trials", s.config.trials},
                       {"seed", s.config.seed},
                       {"tolerance", s.config.tolerance},
                       {"degree_cap", s.config.degree_cap}}},
                     {"trials_run", s.trials_run},
                     {"reports_checked", s.reports_checked},
                     {"failures", s.failures},
                     {"worst_slack", real_or_null(s.worst_slack)},
                     {"equality_hits", s.equality_hits}};
    j["failing_reports"] = nlohmann::json::array();
    for (const auto& r : s.failing_reports) {
        j["failing_reports"].push_back(to_json(r));
    }
    if (s.config.keep_reports) {
        j["reports"] = nlohmann::json::array();
        for (const auto& r : s.reports) {
            j["reports"].push_back(to_json(r));
        }
    }
    return j;
}

nlohmann::json summary_to_json(const SuiteSummary& s)
{
    return {{"deterministic", deterministic_json(s)},
            {"timing", {{"wall_time_ms", s.wall_time_ms}, {"threads", s.threads}}}};
}

void write_json_file(const std::string& path, const nlohmann::json& j)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::FileWrite, "cannot open " + path + " for writing");
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw Error(ErrorKind::FileWrite, "write to " + path + " failed");
    }
}

} // namespace oplab
