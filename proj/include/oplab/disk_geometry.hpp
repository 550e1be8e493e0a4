#pragma once

#include "oplab/error.hpp"

namespace oplab {

/// A point of the unit disk. The default constructor form requires a strict
/// interior point; `DiskPoint::closed` admits the boundary circle and snaps
/// overshoot of at most kBoundarySnap back onto it.
class DiskPoint
{
public:
    static constexpr double kBoundarySnap = 1e-12;

    explicit DiskPoint(Complex value);

    static DiskPoint closed(Complex value);

    Complex value() const noexcept { return value_; }
    operator Complex() const noexcept { return value_; }

    double modulus() const noexcept { return std::abs(value_); }
    bool on_boundary() const noexcept { return modulus() >= 1.0; }

private:
    struct ClosedTag {};
    DiskPoint(Complex value, ClosedTag);

    Complex value_;
};

/// Denominators |1 - conj(w) z| below this are rejected.
inline constexpr double kDegenerateDenominator = 1e-14;

/// (z - w) / (1 - conj(w) z).
Complex pseudo_hyperbolic_complex(Complex z, Complex w);

/// rho(z, w) = |(z - w) / (1 - conj(w) z)|.
double pseudo_hyperbolic_distance(Complex z, Complex w);

/// atanh(rho(z, w)); rejects rho >= 1 - 1e-15.
double hyperbolic_distance(DiskPoint z, DiskPoint w);

/// (1 - |u|^2)(1 - |v|^2), which also equals |1 - conj(u) v|^2 - |u - v|^2.
double s_product(Complex u, Complex v) noexcept;

/// The disk automorphism zeta -> e^{i theta} (zeta - a) / (1 - conj(a) zeta).
Complex disk_automorphism(Complex zeta, double theta, Complex a);

} // namespace oplab
