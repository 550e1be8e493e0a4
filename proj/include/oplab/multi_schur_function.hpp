#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "json.hpp"
#include "oplab/schur_function.hpp"

namespace oplab {

using MultiIndex = std::vector<int>;

/// Schur-class function of n variables: either a polynomial with a certified
/// torus sup-norm bound, or a product f_1(z_1) ... f_n(z_n) of one-variable
/// Schur functions.
class MultiSchurFunction
{
public:
    static constexpr std::size_t kMaxVars = 4;

    static MultiSchurFunction polynomial(std::size_t n_vars, std::map<MultiIndex, Complex> coeffs);
    static MultiSchurFunction separable(std::vector<SchurFunction> factors);

    std::size_t n_vars() const noexcept { return n_vars_; }
    bool is_polynomial() const noexcept { return factors_.empty(); }

    const std::map<MultiIndex, Complex>& coefficients() const noexcept { return coeffs_; }
    const std::vector<SchurFunction>& factors() const noexcept { return factors_; }

    /// Largest |alpha| with a nonzero coefficient (polynomials only).
    int total_degree() const;
    /// Largest exponent of each variable (polynomials only).
    std::vector<int> partial_degrees() const;

    double certified_sup_norm() const noexcept { return sup_norm_; }

    /// factor * f for polynomials, with the bound rescaled instead of recertified.
    MultiSchurFunction scaled(Complex factor) const;

    Complex operator()(const std::vector<Complex>& z) const;

private:
    MultiSchurFunction() = default;

    std::size_t n_vars_ = 0;
    std::map<MultiIndex, Complex> coeffs_;
    std::vector<SchurFunction> factors_;
    double sup_norm_ = 0.0;
};

Complex evaluate(const MultiSchurFunction& f, const std::vector<Complex>& z);

/// Partial derivatives d f / d z_i.
std::vector<Complex> gradient(const MultiSchurFunction& f, const std::vector<Complex>& z);

/// Second partials d^2 f / d z_i d z_j, row-major n x n.
std::vector<std::vector<Complex>> hessian(const MultiSchurFunction& f, const std::vector<Complex>& z);

/// Grid points per variable used to certify a polynomial of the given shape.
std::size_t torus_grid_size(std::size_t n_vars, int total_degree);

/// Phase displacement bound sigma for the torus grid (see grid_inflation_factor).
double torus_sigma(int total_degree, const std::vector<int>& partial_degrees, std::size_t grid);

/// Uncertified maximum of |p| over the product grid of `grid` roots of unity per variable.
double torus_grid_max(std::size_t n_vars, const std::map<MultiIndex, Complex>& coeffs, std::size_t grid);

double sup_norm_estimate(const MultiSchurFunction& f);

/// Random polynomial of total degree at most `degree`, divided by its certified sup norm.
MultiSchurFunction sample_random_multi_polynomial(std::uint64_t seed, std::size_t n_vars, int degree);

/// Product of independent random Blaschke products, one per variable, each of
/// degree between 1 and `degree`.
MultiSchurFunction sample_random_separable(std::uint64_t seed, std::size_t n_vars, int degree);

nlohmann::json to_json(const MultiSchurFunction& f);

} // namespace oplab
