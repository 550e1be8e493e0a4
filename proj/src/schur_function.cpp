#include "oplab/schur_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oplab/json_io.hpp"
#include "oplab/random.hpp"

namespace oplab {

namespace {

constexpr double kPoleFloor = 1e-14;

Complex blaschke_denominator(Complex a, Complex z)
{
    const Complex d = 1.0 - std::conj(a) * z;
    if (std::abs(d) < kPoleFloor) {
        throw Error(ErrorKind::Pole, "Blaschke factor has a pole at the evaluation point");
    }
    return d;
}

Complex horner(const std::vector<Complex>& c, Complex z)
{
    Complex acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * z + c[k];
    }
    return acc;
}

// Multiplies truncated series a and b, keeping terms up to degree `order`.
std::vector<Complex> series_product(const std::vector<Complex>& a, const std::vector<Complex>& b, int order)
{
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

double certify_polynomial(const std::vector<Complex>& coeffs)
{
    std::size_t degree = coeffs.size() - 1;
    while (degree > 0 && coeffs[degree] == Complex{}) {
        --degree;
    }
    if (degree == 0) {
        return std::abs(coeffs[0]);
    }
    const std::size_t points = circle_grid_size(degree);
    const double sigma = std::numbers::pi * static_cast<double>(degree) / static_cast<double>(points);
    return circle_grid_max(coeffs, points) * grid_inflation_factor(sigma);
}

void check_finite(Complex z, const char* what)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorKind::InvalidArgument, std::string("non-finite ") + what);
    }
}

} // namespace

SchurFunction SchurFunction::polynomial(std::vector<Complex> coeffs)
{
    if (coeffs.empty()) {
        coeffs.push_back(0.0);
    }
    for (const Complex& c : coeffs) {
        check_finite(c, "polynomial coefficient");
    }
    const double bound = certify_polynomial(coeffs);
    return polynomial_with_bound(std::move(coeffs), bound);
}

SchurFunction SchurFunction::polynomial_with_bound(std::vector<Complex> coeffs, double certified_bound)
{
    if (coeffs.empty()) {
        coeffs.push_back(0.0);
    }
    SchurFunction f;
    f.kind_ = Kind::Polynomial;
    f.coeffs_ = std::move(coeffs);
    f.sup_norm_ = certified_bound;
    return f;
}

SchurFunction SchurFunction::blaschke(std::vector<Complex> zeros, Complex constant)
{
    for (const Complex& a : zeros) {
        check_finite(a, "Blaschke zero");
        if (std::abs(a) >= 1.0) {
            throw Error(ErrorKind::Boundary, "Blaschke zeros must lie in the open disk");
        }
    }
    if (std::abs(std::abs(constant) - 1.0) > 1e-12) {
        throw Error(ErrorKind::Modulus, "Blaschke constant must be unimodular");
    }
    SchurFunction f;
    f.kind_ = Kind::Blaschke;
    f.zeros_ = std::move(zeros);
    f.constant_ = constant;
    f.sup_norm_ = 1.0;
    return f;
}

std::size_t SchurFunction::degree() const noexcept
{
    if (kind_ == Kind::Blaschke) {
        return zeros_.size();
    }
    std::size_t d = coeffs_.size() - 1;
    while (d > 0 && coeffs_[d] == Complex{}) {
        --d;
    }
    return d;
}

Complex SchurFunction::operator()(Complex z) const
{
    return evaluate(*this, z);
}

Complex evaluate(const SchurFunction& f, Complex z)
{
    if (f.is_polynomial()) {
        return horner(f.coefficients(), z);
    }
    Complex value = f.unimodular_constant();
    for (const Complex& a : f.zeros()) {
        value *= (z - a) / blaschke_denominator(a, z);
    }
    return value;
}

std::vector<Complex> taylor_at(const SchurFunction& f, Complex z, int order)
{
    if (order < 0 || order > kMaxDerivativeOrder) {
        throw Error(ErrorKind::InvalidArgument, "derivative order must be in [0, 8]");
    }
    const auto n = static_cast<std::size_t>(order) + 1;
    if (f.is_polynomial()) {
        // Synthetic division gives p(z + h) coefficients directly.
        std::vector<Complex> c = f.coefficients();
        std::vector<Complex> out(n);
        for (std::size_t k = 0; k < n && !c.empty(); ++k) {
            Complex acc = 0.0;
            std::vector<Complex> quotient(c.size() > 1 ? c.size() - 1 : 0);
            for (std::size_t i = c.size(); i-- > 0;) {
                acc = acc * z + c[i];
                if (i > 0) {
                    quotient[i - 1] = acc;
                }
            }
            out[k] = acc;
            c = std::move(quotient);
        }
        return out;
    }
    std::vector<Complex> series(n);
    series[0] = f.unimodular_constant();
    for (const Complex& a : f.zeros()) {
        const Complex d = blaschke_denominator(a, z);
        std::vector<Complex> factor(n);
        factor[0] = (z - a) / d;
        const Complex ratio = std::conj(a) / d;
        Complex term = (1.0 - std::norm(a)) / (d * d);
        for (std::size_t m = 1; m < n; ++m) {
            factor[m] = term;
            term *= ratio;
        }
        series = series_product(series, factor, order);
    }
    return series;
}

Complex derivative(const SchurFunction& f, Complex z, int order)
{
    if (order < 1) {
        throw Error(ErrorKind::InvalidArgument, "derivative order must be positive");
    }
    const auto t = taylor_at(f, z, order);
    return std::tgamma(order + 1.0) * t[static_cast<std::size_t>(order)];
}

Complex derivative_cauchy(const SchurFunction& f, Complex z, int order, double radius, int points)
{
    Complex sum = 0.0;
    for (int j = 0; j < points; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / points;
        sum += evaluate(f, z + std::polar(radius, theta)) * std::polar(1.0, -order * theta);
    }
    return std::tgamma(order + 1.0) * sum / (static_cast<double>(points) * std::pow(radius, order));
}

std::vector<Complex> taylor_coefficients(const SchurFunction& f, std::size_t count)
{
    if (count == 0 || count > kMaxTaylorCount) {
        throw Error(ErrorKind::InvalidArgument, "coefficient count must be in [1, 4096]");
    }
    std::vector<Complex> out(count);
    if (f.is_polynomial()) {
        const auto& c = f.coefficients();
        std::copy_n(c.begin(), std::min(count, c.size()), out.begin());
        return out;
    }
    out[0] = f.unimodular_constant();
    std::vector<Complex> next(count);
    for (const Complex& a : f.zeros()) {
        // q (1 - conj(a) z) = p (z - a)
        const Complex ab = std::conj(a);
        Complex previous = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            const Complex shifted = k > 0 ? out[k - 1] : Complex{};
            next[k] = ab * previous + shifted - a * out[k];
            previous = next[k];
        }
        out.swap(next);
    }
    return out;
}

std::vector<Complex> taylor_coefficients_dft(const std::function<Complex(Complex)>& g, std::size_t count,
                                             double radius, std::size_t points)
{
    std::vector<Complex> samples(points);
    for (std::size_t j = 0; j < points; ++j) {
        samples[j] = g(std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points)));
    }
    std::vector<Complex> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        Complex sum = 0.0;
        for (std::size_t j = 0; j < points; ++j) {
            const std::size_t phase = (j * k) % points;
            sum += samples[j] *
                   std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(points));
        }
        out[k] = sum / (static_cast<double>(points) * std::pow(radius, static_cast<double>(k)));
    }
    return out;
}

double grid_inflation_factor(double sigma)
{
    if (sigma <= 0.0) {
        return 1.0;
    }
    if (sigma * sigma >= 2.0) {
        throw Error(ErrorKind::InvalidArgument, "certification grid too coarse for the degree");
    }
    return 1.0 / std::sqrt(1.0 - 0.5 * sigma * sigma);
}

std::size_t circle_grid_size(std::size_t degree)
{
    return std::max<std::size_t>(4096, 64 * degree);
}

double sup_norm_estimate(const SchurFunction& f)
{
    return f.certified_sup_norm();
}

double circle_grid_max(const std::vector<Complex>& coeffs, std::size_t points)
{
    double m = 0.0;
    for (std::size_t j = 0; j < points; ++j) {
        const Complex z =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points));
        m = std::max(m, std::abs(horner(coeffs, z)));
    }
    return m;
}

Complex hyperbolic_divided_difference(const SchurFunction& f, DiskPoint z, DiskPoint w)
{
    if (std::abs(z.value() - w.value()) < kConfluenceThreshold) {
        throw Error(ErrorKind::Confluence, "points closer than 1e-10; use the confluent form");
    }
    const Complex fz = evaluate(f, z);
    const Complex fw = evaluate(f, w);
    if (std::abs(fw) >= 1.0 || std::abs(fz) >= 1.0) {
        throw Error(ErrorKind::Modulus, "function value on the unit circle");
    }
    return (fz - fw) / (z.value() - w.value()) * (1.0 - std::conj(w.value()) * z.value()) /
           (1.0 - std::conj(fw) * fz);
}

Complex confluent_hyperbolic_difference(const SchurFunction& f, DiskPoint z)
{
    const auto t = taylor_at(f, z, 1);
    if (std::abs(t[0]) >= 1.0) {
        throw Error(ErrorKind::Modulus, "function value on the unit circle");
    }
    return (1.0 - std::norm(z.value())) * t[1] / (1.0 - std::norm(t[0]));
}

SchurFunction sample_random_schur(std::uint64_t seed, std::size_t degree)
{
    if (degree > 64) {
        throw Error(ErrorKind::InvalidArgument, "sampler degree must be at most 64");
    }
    Rng rng(seed);
    std::vector<Complex> zeros(degree);
    for (auto& a : zeros) {
        a = rng.disk(0.95);
    }
    const Complex c = rng.unimodular();
    return SchurFunction::blaschke(std::move(zeros), c);
}

SchurFunction sample_random_polynomial(std::uint64_t seed, std::size_t degree)
{
    if (degree > 64) {
        throw Error(ErrorKind::InvalidArgument, "sampler degree must be at most 64");
    }
    Rng rng(seed);
    std::vector<Complex> coeffs(degree + 1);
    for (auto& c : coeffs) {
        c = rng.complex_normal();
    }
    const double bound = SchurFunction::polynomial(coeffs).certified_sup_norm();
    for (auto& c : coeffs) {
        c /= bound;
    }
    return SchurFunction::polynomial(std::move(coeffs));
}

SchurFunction dilate(const SchurFunction& f, double r)
{
    if (!(r > 0.0 && r < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "dilation radius must lie in (0, 1)");
    }
    if (f.is_polynomial()) {
        std::vector<Complex> c = f.coefficients();
        double power = 1.0;
        for (auto& a : c) {
            a *= power;
            power *= r;
        }
        const double own = SchurFunction::polynomial(c).certified_sup_norm();
        return SchurFunction::polynomial_with_bound(std::move(c), std::min(own, f.certified_sup_norm()));
    }

    // |a_k| <= M(R) / R^k on any radius 1 <= R < 1/max|zero|, so the dilated
    // tail past K is at most M(R) (r/R)^K / (1 - r/R). Pick the R needing fewest terms.
    double rho_max = 0.0;
    for (const Complex& a : f.zeros()) {
        rho_max = std::max(rho_max, std::abs(a));
    }
    constexpr std::size_t kMaxTerms = 65536;
    double best_terms = std::numeric_limits<double>::infinity();
    double best_tail = 0.0;
    const double r_limit = rho_max > 0.0 ? 1.0 / rho_max : 1e6;
    for (int step = 0; step < 64; ++step) {
        const double big_r = 1.0 + (r_limit - 1.0) * step / 64.0;
        double log_m = 0.0;
        for (const Complex& a : f.zeros()) {
            const double ra = std::abs(a);
            log_m += std::log((big_r + ra) / (1.0 - ra * big_r));
        }
        const double q = r / big_r;
        const double log_target = std::log(kDilationTruncation * (1.0 - q)) - log_m;
        const double terms = std::max(1.0, std::ceil(log_target / std::log(q)));
        if (terms < best_terms) {
            best_terms = terms;
            best_tail = std::exp(log_m + terms * std::log(q)) / (1.0 - q);
        }
    }
    if (best_terms > static_cast<double>(kMaxTerms)) {
        throw Error(ErrorKind::InvalidArgument, "dilated expansion would exceed 65536 terms");
    }
    const auto count = static_cast<std::size_t>(best_terms);
    std::vector<Complex> c(count);
    c[0] = f.unimodular_constant();
    std::vector<Complex> next(count);
    for (const Complex& a : f.zeros()) {
        const Complex ab = std::conj(a);
        Complex previous = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            const Complex shifted = k > 0 ? c[k - 1] : Complex{};
            next[k] = ab * previous + shifted - a * c[k];
            previous = next[k];
        }
        c.swap(next);
    }
    double power = 1.0;
    for (auto& a : c) {
        a *= power;
        power *= r;
    }
    return SchurFunction::polynomial_with_bound(std::move(c), 1.0 + best_tail);
}

nlohmann::json to_json(const SchurFunction& f)
{
    nlohmann::json j;
    if (f.is_blaschke()) {
        j["kind"] = "blaschke";
        j["zeros"] = nlohmann::json::array();
        for (const Complex& a : f.zeros()) {
            j["zeros"].push_back(complex_to_json(a));
        }
        j["constant"] = complex_to_json(f.unimodular_constant());
    } else {
        j["kind"] = "poly";
        j["coeffs"] = nlohmann::json::array();
        for (const Complex& c : f.coefficients()) {
            j["coeffs"].push_back(complex_to_json(c));
        }
    }
    return j;
}

SchurFunction schur_function_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw Error(ErrorKind::Parse, "Schur function JSON needs a kind");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "blaschke") {
        if (!j.contains("zeros") || !j["zeros"].is_array() || !j.contains("constant")) {
            throw Error(ErrorKind::Parse, "Blaschke JSON needs zeros and constant");
        }
        std::vector<Complex> zeros;
        for (const auto& z : j["zeros"]) {
            zeros.push_back(complex_from_json(z));
        }
        return SchurFunction::blaschke(std::move(zeros), complex_from_json(j["constant"]));
    }
    if (kind == "poly") {
        if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
            throw Error(ErrorKind::Parse, "polynomial JSON needs coeffs");
        }
        std::vector<Complex> coeffs;
        for (const auto& c : j["coeffs"]) {
            coeffs.push_back(complex_from_json(c));
        }
        return SchurFunction::polynomial(std::move(coeffs));
    }
    throw Error(ErrorKind::Parse, "unknown Schur function kind " + kind);
}

} // namespace oplab
