#include "oplab/error.hpp"

namespace oplab {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DegenerateDenominator: return "degenerate-denominator";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Confluence: return "confluence";
    case ErrorKind::NearConfluence: return "near-confluence";
    case ErrorKind::Modulus: return "modulus";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Boundary: return "boundary";
    case ErrorKind::Separation: return "separation";
    case ErrorKind::NotHermitian: return "not-hermitian";
    case ErrorKind::Negativity: return "negativity";
    case ErrorKind::NotContraction: return "not-contraction";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::StackNorm: return "stack-norm";
    case ErrorKind::RowNorm: return "row-norm";
    case ErrorKind::Strictness: return "strictness";
    case ErrorKind::NonTriangular: return "non-triangular";
    case ErrorKind::SpectrumDomain: return "spectrum-domain";
    case ErrorKind::Commutativity: return "commutativity";
    case ErrorKind::Size: return "size";
    case ErrorKind::Gap: return "gap";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Contour: return "contour";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::UnknownSuite: return "unknown-suite";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::FileWrite: return "file-write";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

} // namespace oplab
