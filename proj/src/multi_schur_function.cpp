#include "oplab/multi_schur_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "oplab/json_io.hpp"
#include "oplab/random.hpp"

namespace oplab {

namespace {

constexpr std::size_t kTorusBudget = std::size_t{1} << 24;

void check_point(const MultiSchurFunction& f, const std::vector<Complex>& z)
{
    if (z.size() != f.n_vars()) {
        throw Error(ErrorKind::Size, "point dimension does not match the number of variables");
    }
}

Complex monomial(const MultiIndex& alpha, const std::vector<Complex>& z)
{
    Complex m = 1.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (int e = 0; e < alpha[i]; ++e) {
            m *= z[i];
        }
    }
    return m;
}

// Evaluates the dense coefficient block over the torus grid by collapsing one
// variable at a time. `dense` has extents[0] x ... x extents[n-1], last index fastest.
void collapse(const std::vector<Complex>& dense, const std::vector<std::size_t>& extents, std::size_t axis,
              const std::vector<std::vector<Complex>>& powers, double& best)
{
    const std::size_t n = extents.size();
    if (axis + 1 == n) {
        const std::size_t d = extents[axis];
        const auto& pw = powers[d - 1];
        const std::size_t grid = pw.size() / d;
        for (std::size_t j = 0; j < grid; ++j) {
            Complex acc = 0.0;
            const Complex* row = &pw[j * d];
            for (std::size_t k = 0; k < d; ++k) {
                acc += dense[k] * row[k];
            }
            best = std::max(best, std::norm(acc));
        }
        return;
    }
    const std::size_t d = extents[axis];
    const std::size_t inner = dense.size() / d;
    const auto& pw = powers[d - 1];
    const std::size_t grid = pw.size() / d;
    std::vector<Complex> reduced(inner);
    for (std::size_t j = 0; j < grid; ++j) {
        std::fill(reduced.begin(), reduced.end(), Complex{});
        const Complex* row = &pw[j * d];
        for (std::size_t k = 0; k < d; ++k) {
            const Complex w = row[k];
            const Complex* src = &dense[k * inner];
            for (std::size_t t = 0; t < inner; ++t) {
                reduced[t] += w * src[t];
            }
        }
        collapse(reduced, extents, axis + 1, powers, best);
    }
}

} // namespace

MultiSchurFunction MultiSchurFunction::polynomial(std::size_t n_vars, std::map<MultiIndex, Complex> coeffs)
{
    if (n_vars == 0 || n_vars > kMaxVars) {
        throw Error(ErrorKind::Size, "number of variables must be in [1, 4]");
    }
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->first.size() != n_vars ||
            std::any_of(it->first.begin(), it->first.end(), [](int e) { return e < 0; })) {
            throw Error(ErrorKind::InvalidArgument, "malformed multi-index");
        }
        if (!std::isfinite(it->second.real()) || !std::isfinite(it->second.imag())) {
            throw Error(ErrorKind::InvalidArgument, "non-finite coefficient");
        }
        it = it->second == Complex{} ? coeffs.erase(it) : std::next(it);
    }
    MultiSchurFunction f;
    f.n_vars_ = n_vars;
    f.coeffs_ = std::move(coeffs);

    const int degree = f.total_degree();
    if (degree == 0) {
        f.sup_norm_ = f.coeffs_.empty() ? 0.0 : std::abs(f.coeffs_.begin()->second);
        return f;
    }
    const std::size_t grid = torus_grid_size(n_vars, degree);
    const double sigma = torus_sigma(degree, f.partial_degrees(), grid);
    f.sup_norm_ = torus_grid_max(n_vars, f.coeffs_, grid) * grid_inflation_factor(sigma);
    return f;
}

MultiSchurFunction MultiSchurFunction::separable(std::vector<SchurFunction> factors)
{
    if (factors.empty() || factors.size() > kMaxVars) {
        throw Error(ErrorKind::Size, "number of variables must be in [1, 4]");
    }
    MultiSchurFunction f;
    f.n_vars_ = factors.size();
    f.sup_norm_ = 1.0;
    for (const auto& g : factors) {
        f.sup_norm_ *= g.certified_sup_norm();
    }
    f.factors_ = std::move(factors);
    return f;
}

MultiSchurFunction MultiSchurFunction::scaled(Complex factor) const
{
    if (!is_polynomial()) {
        throw Error(ErrorKind::InvalidArgument, "only polynomials can be rescaled");
    }
    MultiSchurFunction f = *this;
    for (auto& [alpha, c] : f.coeffs_) {
        c *= factor;
    }
    f.sup_norm_ = sup_norm_ * std::abs(factor);
    return f;
}

int MultiSchurFunction::total_degree() const
{
    if (!is_polynomial()) {
        throw Error(ErrorKind::InvalidArgument, "degree of a non-polynomial");
    }
    int d = 0;
    for (const auto& [alpha, c] : coeffs_) {
        d = std::max(d, std::accumulate(alpha.begin(), alpha.end(), 0));
    }
    return d;
}

std::vector<int> MultiSchurFunction::partial_degrees() const
{
    if (!is_polynomial()) {
        throw Error(ErrorKind::InvalidArgument, "degree of a non-polynomial");
    }
    std::vector<int> d(n_vars_, 0);
    for (const auto& [alpha, c] : coeffs_) {
        for (std::size_t i = 0; i < n_vars_; ++i) {
            d[i] = std::max(d[i], alpha[i]);
        }
    }
    return d;
}

Complex MultiSchurFunction::operator()(const std::vector<Complex>& z) const
{
    return evaluate(*this, z);
}

Complex evaluate(const MultiSchurFunction& f, const std::vector<Complex>& z)
{
    check_point(f, z);
    if (!f.is_polynomial()) {
        Complex v = 1.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            v *= evaluate(f.factors()[i], z[i]);
        }
        return v;
    }
    Complex v = 0.0;
    for (const auto& [alpha, c] : f.coefficients()) {
        v += c * monomial(alpha, z);
    }
    return v;
}

std::vector<Complex> gradient(const MultiSchurFunction& f, const std::vector<Complex>& z)
{
    check_point(f, z);
    const std::size_t n = f.n_vars();
    std::vector<Complex> g(n);
    if (!f.is_polynomial()) {
        std::vector<std::vector<Complex>> t(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = taylor_at(f.factors()[i], z[i], 1);
        }
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                g[i] *= t[j][i == j ? 1 : 0];
            }
        }
        return g;
    }
    for (const auto& [alpha, c] : f.coefficients()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha[i] == 0) {
                continue;
            }
            MultiIndex beta = alpha;
            --beta[i];
            g[i] += c * static_cast<double>(alpha[i]) * monomial(beta, z);
        }
    }
    return g;
}

std::vector<std::vector<Complex>> hessian(const MultiSchurFunction& f, const std::vector<Complex>& z)
{
    check_point(f, z);
    const std::size_t n = f.n_vars();
    std::vector<std::vector<Complex>> h(n, std::vector<Complex>(n));
    if (!f.is_polynomial()) {
        std::vector<std::vector<Complex>> t(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = taylor_at(f.factors()[i], z[i], 2);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Complex v = 1.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const int order = (k == i ? 1 : 0) + (k == j ? 1 : 0);
                    // taylor_at stores f^(m)/m!; second derivative needs the factor 2.
                    v *= order == 2 ? 2.0 * t[k][2] : t[k][static_cast<std::size_t>(order)];
                }
                h[i][j] = v;
            }
        }
        return h;
    }
    for (const auto& [alpha, c] : f.coefficients()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                MultiIndex beta = alpha;
                double factor = beta[i];
                --beta[i];
                if (beta[i] < 0) {
                    continue;
                }
                factor *= beta[j];
                --beta[j];
                if (beta[j] < 0) {
                    continue;
                }
                h[i][j] += c * factor * monomial(beta, z);
            }
        }
    }
    return h;
}

std::size_t torus_grid_size(std::size_t n_vars, int total_degree)
{
    auto points = [&](std::size_t g) {
        std::size_t p = 1;
        for (std::size_t i = 0; i < n_vars; ++i) {
            p *= g;
        }
        return p;
    };
    std::size_t grid = std::max<std::size_t>(256, 32 * static_cast<std::size_t>(std::max(total_degree, 0)));
    if (points(grid) > kTorusBudget) {
        grid = 1;
        while (points(grid * 2) <= kTorusBudget) {
            grid *= 2;
        }
    }
    return grid;
}

double torus_sigma(int total_degree, const std::vector<int>& partial_degrees, std::size_t grid)
{
    const int sum = std::accumulate(partial_degrees.begin(), partial_degrees.end(), 0);
    return std::min(2 * total_degree, sum) * std::numbers::pi / static_cast<double>(grid);
}

double torus_grid_max(std::size_t n_vars, const std::map<MultiIndex, Complex>& coeffs, std::size_t grid)
{
    std::vector<std::size_t> extents(n_vars, 1);
    for (const auto& [alpha, c] : coeffs) {
        for (std::size_t i = 0; i < n_vars; ++i) {
            extents[i] = std::max(extents[i], static_cast<std::size_t>(alpha[i]) + 1);
        }
    }
    std::size_t total = 1;
    for (std::size_t e : extents) {
        total *= e;
    }
    std::vector<Complex> dense(total);
    for (const auto& [alpha, c] : coeffs) {
        std::size_t offset = 0;
        for (std::size_t i = 0; i < n_vars; ++i) {
            offset = offset * extents[i] + static_cast<std::size_t>(alpha[i]);
        }
        dense[offset] += c;
    }
    // powers[d - 1][j * d + k] = omega^{j k} for grid index j and exponent k < d.
    const std::size_t max_extent = *std::max_element(extents.begin(), extents.end());
    std::vector<std::vector<Complex>> powers(max_extent);
    for (std::size_t d = 1; d <= max_extent; ++d) {
        powers[d - 1].resize(grid * d);
        for (std::size_t j = 0; j < grid; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                const std::size_t phase = (j * k) % grid;
                powers[d - 1][j * d + k] =
                    std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(grid));
            }
        }
    }
    double best = 0.0;
    collapse(dense, extents, 0, powers, best);
    return std::sqrt(best);
}

double sup_norm_estimate(const MultiSchurFunction& f)
{
    return f.certified_sup_norm();
}

MultiSchurFunction sample_random_multi_polynomial(std::uint64_t seed, std::size_t n_vars, int degree)
{
    Rng rng(seed);
    std::map<MultiIndex, Complex> coeffs;
    MultiIndex alpha(n_vars, 0);
    // Enumerate every multi-index with |alpha| <= degree.
    while (true) {
        coeffs[alpha] = rng.complex_normal();
        std::size_t i = n_vars;
        while (i-- > 0) {
            ++alpha[i];
            if (std::accumulate(alpha.begin(), alpha.end(), 0) <= degree) {
                break;
            }
            alpha[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) {
            break;
        }
    }
    const auto raw = MultiSchurFunction::polynomial(n_vars, std::move(coeffs));
    return raw.scaled(1.0 / raw.certified_sup_norm());
}

MultiSchurFunction sample_random_separable(std::uint64_t seed, std::size_t n_vars, int degree)
{
    Rng rng(seed);
    std::vector<SchurFunction> factors;
    for (std::size_t i = 0; i < n_vars; ++i) {
        const int d = rng.integer(1, std::max(1, degree));
        factors.push_back(sample_random_schur(rng.next(), static_cast<std::size_t>(d)));
    }
    return MultiSchurFunction::separable(std::move(factors));
}

nlohmann::json to_json(const MultiSchurFunction& f)
{
    nlohmann::json j;
    j["n_vars"] = f.n_vars();
    if (f.is_polynomial()) {
        j["kind"] = "multi-poly";
        j["terms"] = nlohmann::json::array();
        for (const auto& [alpha, c] : f.coefficients()) {
            j["terms"].push_back({{"index", alpha}, {"coeff", complex_to_json(c)}});
        }
    } else {
        j["kind"] = "separable";
        j["factors"] = nlohmann::json::array();
        for (const auto& g : f.factors()) {
            j["factors"].push_back(to_json(g));
        }
    }
    j["certified_sup_norm"] = f.certified_sup_norm();
    return j;
}

} // namespace oplab
