#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "json.hpp"
#include "oplab/disk_geometry.hpp"

namespace oplab {

/// One-variable Schur-class function given either by polynomial coefficients
/// (ascending powers) or as a finite Blaschke product c * prod (z - a)/(1 - conj(a) z).
class SchurFunction
{
public:
    enum class Kind { Polynomial, Blaschke };

    /// Certifies the sup norm on construction.
    static SchurFunction polynomial(std::vector<Complex> coeffs);
    static SchurFunction blaschke(std::vector<Complex> zeros, Complex constant = 1.0);
    static SchurFunction identity() { return blaschke({0.0}); }
    static SchurFunction constant(Complex value) { return polynomial({value}); }

    /// Polynomial whose sup-norm bound is supplied by the caller instead of the
    /// circle grid. Used for long truncated expansions with an analytic bound.
    static SchurFunction polynomial_with_bound(std::vector<Complex> coeffs, double certified_bound);

    Kind kind() const noexcept { return kind_; }
    bool is_polynomial() const noexcept { return kind_ == Kind::Polynomial; }
    bool is_blaschke() const noexcept { return kind_ == Kind::Blaschke; }

    const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }
    const std::vector<Complex>& zeros() const noexcept { return zeros_; }
    Complex unimodular_constant() const noexcept { return constant_; }

    /// Polynomial degree, or the number of Blaschke factors.
    std::size_t degree() const noexcept;

    double certified_sup_norm() const noexcept { return sup_norm_; }

    Complex operator()(Complex z) const;

private:
    SchurFunction() = default;

    Kind kind_ = Kind::Polynomial;
    std::vector<Complex> coeffs_;
    std::vector<Complex> zeros_;
    Complex constant_ = 1.0;
    double sup_norm_ = 0.0;
};

/// Horner for polynomials, product of factors for Blaschke products. Throws
/// Pole when a Blaschke denominator vanishes.
Complex evaluate(const SchurFunction& f, Complex z);

inline constexpr int kMaxDerivativeOrder = 8;

/// Exact derivative: coefficient shift for polynomials, Leibniz product over
/// the Blaschke factors otherwise.
Complex derivative(const SchurFunction& f, Complex z, int order);

/// f(z), f'(z), ..., f^(order)(z) / order! in one pass (Taylor data at z).
std::vector<Complex> taylor_at(const SchurFunction& f, Complex z, int order);

/// Derivative by trapezoidal Cauchy quadrature on the circle |zeta - z| = radius.
Complex derivative_cauchy(const SchurFunction& f, Complex z, int order, double radius, int points = 256);

inline constexpr std::size_t kMaxTaylorCount = 4096;

/// a_0 .. a_{count-1} at the origin. Exact for polynomials; Blaschke products
/// are expanded factor by factor with the recurrence for multiplication by
/// (z - a)/(1 - conj(a) z).
std::vector<Complex> taylor_coefficients(const SchurFunction& f, std::size_t count);

/// Coefficients by DFT of samples on |z| = radius, divided by radius^k.
std::vector<Complex> taylor_coefficients_dft(const std::function<Complex(Complex)>& g, std::size_t count,
                                             double radius = 0.5, std::size_t points = 2048);

/// Multiplier applied to a grid maximum to get a certified bound for a
/// trigonometric polynomial |p|^2 whose phase can move by at most sigma
/// between a maximiser and the nearest grid node. Requires sigma < sqrt(2).
double grid_inflation_factor(double sigma);

/// Number of circle samples used to certify a polynomial of the given degree.
std::size_t circle_grid_size(std::size_t degree);

/// 1 for Blaschke products; certified bound otherwise.
double sup_norm_estimate(const SchurFunction& f);

/// Uncertified maximum of |p| over an N-point grid on the unit circle.
double circle_grid_max(const std::vector<Complex>& coeffs, std::size_t points);

inline constexpr double kConfluenceThreshold = 1e-10;

/// f*(z, w) = [(f(z) - f(w))/(z - w)] [(1 - conj(w) z)/(1 - conj(f(w)) f(z))].
Complex hyperbolic_divided_difference(const SchurFunction& f, DiskPoint z, DiskPoint w);

/// (1 - |z|^2) f'(z) / (1 - |f(z)|^2).
Complex confluent_hyperbolic_difference(const SchurFunction& f, DiskPoint z);

/// Blaschke product with `degree` zeros area-uniform in |z| < 0.95 and a
/// uniform unimodular constant.
SchurFunction sample_random_schur(std::uint64_t seed, std::size_t degree);

/// Random complex polynomial divided by its certified sup norm.
SchurFunction sample_random_polynomial(std::uint64_t seed, std::size_t degree);

/// z -> f(r z). Blaschke products are re-expanded into a truncated Taylor
/// polynomial with tail below 1e-14.
SchurFunction dilate(const SchurFunction& f, double r);

inline constexpr double kDilationTruncation = 1e-14;

nlohmann::json to_json(const SchurFunction& f);
SchurFunction schur_function_from_json(const nlohmann::json& j);

} // namespace oplab
