#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oplab {

using Complex = std::complex<double>;

/// Feasibility tolerance used when a caller does not supply one.
inline constexpr double kDefaultTolerance = 1e-10;

/// Reports whose |slack| is below this are flagged as equality cases.
inline constexpr double kEqualityTolerance = 1e-8;

enum class ErrorKind {
    DegenerateDenominator,
    Overflow,
    Confluence,
    NearConfluence,
    Modulus,
    Pole,
    Boundary,
    Separation,
    NotHermitian,
    Negativity,
    NotContraction,
    Infeasible,
    StackNorm,
    RowNorm,
    Strictness,
    NonTriangular,
    SpectrumDomain,
    Commutativity,
    Size,
    Gap,
    Singular,
    Contour,
    Convergence,
    UnknownSuite,
    Parse,
    FileWrite,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace oplab
