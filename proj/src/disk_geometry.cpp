#include "oplab/disk_geometry.hpp"

#include <cmath>
#include <sstream>

namespace oplab {

namespace {

std::string describe(Complex z)
{
    std::ostringstream out;
    out.precision(17);
    out << z << " (modulus " << std::abs(z) << ")";
    return out.str();
}

} // namespace

DiskPoint::DiskPoint(Complex value) : value_(value)
{
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || std::abs(value) >= 1.0) {
        throw Error(ErrorKind::Boundary, "interior disk point required, got " + describe(value));
    }
}

DiskPoint::DiskPoint(Complex value, ClosedTag) : value_(value) {}

DiskPoint DiskPoint::closed(Complex value)
{
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error(ErrorKind::Boundary, "non-finite disk point");
    }
    const double modulus = std::abs(value);
    if (modulus > 1.0 + kBoundarySnap) {
        throw Error(ErrorKind::Boundary, "point outside the closed disk: " + describe(value));
    }
    if (modulus > 1.0) {
        value /= modulus;
    }
    return DiskPoint(value, ClosedTag{});
}

Complex pseudo_hyperbolic_complex(Complex z, Complex w)
{
    const Complex denominator = 1.0 - std::conj(w) * z;
    if (std::abs(denominator) < kDegenerateDenominator) {
        throw Error(ErrorKind::DegenerateDenominator,
                    "1 - conj(w) z vanishes for z = " + describe(z) + ", w = " + describe(w));
    }
    return (z - w) / denominator;
}

double pseudo_hyperbolic_distance(Complex z, Complex w)
{
    return std::abs(pseudo_hyperbolic_complex(z, w));
}

double hyperbolic_distance(DiskPoint z, DiskPoint w)
{
    const double rho = pseudo_hyperbolic_distance(z, w);
    if (rho >= 1.0 - 1e-15) {
        throw Error(ErrorKind::Overflow, "pseudo-hyperbolic distance too close to 1");
    }
    return std::atanh(rho);
}

double s_product(Complex u, Complex v) noexcept
{
    return (1.0 - std::norm(u)) * (1.0 - std::norm(v));
}

Complex disk_automorphism(Complex zeta, double theta, Complex a)
{
    return std::polar(1.0, theta) * pseudo_hyperbolic_complex(zeta, a);
}

} // namespace oplab
