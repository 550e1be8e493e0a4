#include "oplab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace oplab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kJacobiSweeps = 80;

struct Rotation {
    double c = 1.0;
    double s = 0.0;
    Complex phase = 1.0;
};

// Jacobi rotation annihilating the off-diagonal entry gamma of the Hermitian
// 2x2 block [[alpha, gamma], [conj(gamma), beta]].
Rotation jacobi_rotation(double alpha, double beta, Complex gamma)
{
    const double g = std::abs(gamma);
    const double zeta = (beta - alpha) / (2.0 * g);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
    Rotation r;
    r.c = 1.0 / std::hypot(1.0, t);
    r.s = r.c * t;
    r.phase = gamma / g;
    return r;
}

// Columns p, q of m <- (c a_p - s conj(e) a_q, s a_p + c conj(e) a_q).
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& r)
{
    const Complex e = std::conj(r.phase);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Complex ap = m(i, p);
        const Complex aq = m(i, q);
        m(i, p) = r.c * ap - r.s * e * aq;
        m(i, q) = r.s * ap + r.c * e * aq;
    }
}

void rotate_rows_adjoint(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& r)
{
    const Complex e = r.phase;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Complex ap = m(p, j);
        const Complex aq = m(q, j);
        m(p, j) = r.c * ap - r.s * e * aq;
        m(q, j) = r.s * ap + r.c * e * aq;
    }
}

SingularValueDecomposition svd_tall(const ComplexMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t n = m.cols();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    for (int sweep = 0; sweep < kJacobiSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0;
                double beta = 0.0;
                Complex gamma = 0.0;
                for (std::size_t i = 0; i < rows; ++i) {
                    alpha += std::norm(a(i, p));
                    beta += std::norm(a(i, q));
                    gamma += std::conj(a(i, p)) * a(i, q);
                }
                if (std::abs(gamma) <= kEps * std::sqrt(alpha * beta) || std::abs(gamma) == 0.0) {
                    continue;
                }
                rotated = true;
                const Rotation r = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(a, p, q, r);
                rotate_columns(v, p, q, r);
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            s += std::norm(a(i, j));
        }
        norms[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SingularValueDecomposition out{ComplexMatrix(rows, n), std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.sigma[k] = norms[j];
        for (std::size_t i = 0; i < n; ++i) {
            out.v(i, k) = v(i, j);
        }
        if (norms[j] > 0.0) {
            for (std::size_t i = 0; i < rows; ++i) {
                out.u(i, k) = a(i, j) / norms[j];
            }
        }
    }
    return out;
}

struct Givens {
    double c = 1.0;
    Complex s = 0.0;
};

// G = [[c, s], [-conj(s), c]] with G [x; y] = [r; 0].
Givens givens(Complex x, Complex y)
{
    const double ax = std::abs(x);
    const double rho = std::hypot(ax, std::abs(y));
    if (rho == 0.0) {
        return {};
    }
    if (ax == 0.0) {
        return {0.0, 1.0};
    }
    return {ax / rho, (x / ax) * std::conj(y) / rho};
}

void apply_rows(ComplexMatrix& t, std::size_t k, const Givens& g)
{
    for (std::size_t j = 0; j < t.cols(); ++j) {
        const Complex a = t(k, j);
        const Complex b = t(k + 1, j);
        t(k, j) = g.c * a + g.s * b;
        t(k + 1, j) = -std::conj(g.s) * a + g.c * b;
    }
}

void apply_columns_adjoint(ComplexMatrix& t, std::size_t k, const Givens& g)
{
    for (std::size_t i = 0; i < t.rows(); ++i) {
        const Complex a = t(i, k);
        const Complex b = t(i, k + 1);
        t(i, k) = g.c * a + std::conj(g.s) * b;
        t(i, k + 1) = -g.s * a + g.c * b;
    }
}

void hessenberg_reduce(ComplexMatrix& t, ComplexMatrix& q)
{
    const std::size_t n = t.rows();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::vector<Complex> v(n - k - 1);
        double norm_x = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i - k - 1] = t(i, k);
            norm_x += std::norm(t(i, k));
        }
        norm_x = std::sqrt(norm_x);
        if (norm_x == 0.0) {
            continue;
        }
        const Complex x0 = v[0];
        const Complex unit = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
        v[0] += unit * norm_x;
        double norm_v = 0.0;
        for (const Complex& z : v) {
            norm_v += std::norm(z);
        }
        norm_v = std::sqrt(norm_v);
        for (Complex& z : v) {
            z /= norm_v;
        }
        // t <- (I - 2 v v*) t (I - 2 v v*), q <- q (I - 2 v v*)
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) {
                dot += std::conj(v[i - k - 1]) * t(i, j);
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                t(i, j) -= 2.0 * v[i - k - 1] * dot;
            }
        }
        auto right = [&](ComplexMatrix& m) {
            for (std::size_t i = 0; i < n; ++i) {
                Complex dot = 0.0;
                for (std::size_t j = k + 1; j < n; ++j) {
                    dot += m(i, j) * v[j - k - 1];
                }
                for (std::size_t j = k + 1; j < n; ++j) {
                    m(i, j) -= 2.0 * dot * std::conj(v[j - k - 1]);
                }
            }
        };
        right(t);
        right(q);
        for (std::size_t i = k + 2; i < n; ++i) {
            t(i, k) = 0.0;
        }
    }
}

Complex wilkinson_shift(const ComplexMatrix& t, std::size_t hi)
{
    const Complex a = t(hi - 1, hi - 1);
    const Complex b = t(hi - 1, hi);
    const Complex c = t(hi, hi - 1);
    const Complex d = t(hi, hi);
    const Complex half = 0.5 * (a - d);
    const Complex disc = std::sqrt(half * half + b * c);
    const Complex mu1 = 0.5 * (a + d) + disc;
    const Complex mu2 = 0.5 * (a + d) - disc;
    return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

} // namespace

SingularValueDecomposition svd(const ComplexMatrix& m)
{
    if (m.empty()) {
        return {};
    }
    if (m.rows() >= m.cols()) {
        return svd_tall(m);
    }
    SingularValueDecomposition t = svd_tall(m.adjoint());
    return {t.v, t.sigma, t.u};
}

std::vector<double> singular_values(const ComplexMatrix& m)
{
    return svd(m).sigma;
}

double operator_norm(const ComplexMatrix& m)
{
    const auto s = singular_values(m);
    return s.empty() ? 0.0 : s.front();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h)
{
    if (!h.is_hermitian(1e-12 * std::max(1.0, h.max_abs()))) {
        throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within 1e-12");
    }
    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    for (int sweep = 0; sweep < kJacobiSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (off == 0.0) {
            break;
        }
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex gamma = a(p, q);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                if (std::abs(gamma) == 0.0 ||
                    std::abs(gamma) <= 0.5 * kEps * kEps * (std::abs(app) + std::abs(aqq))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                rotated = true;
                const Rotation r = jacobi_rotation(app, aqq, gamma);
                rotate_columns(a, p, q, r);
                rotate_rows_adjoint(a, p, q, r);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, r);
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

SchurDecomposition schur(const ComplexMatrix& m)
{
    if (!m.is_square()) {
        throw Error(ErrorKind::Size, "Schur decomposition needs a square matrix");
    }
    const std::size_t n = m.rows();
    SchurDecomposition out{ComplexMatrix::identity(n), m};
    if (n <= 1) {
        return out;
    }
    ComplexMatrix& t = out.t;
    ComplexMatrix& q = out.q;
    hessenberg_reduce(t, q);

    const double scale = std::max(t.max_abs(), std::numeric_limits<double>::min());
    const int cap = 60 * static_cast<int>(n);
    int total = 0;
    int since_deflation = 0;
    std::size_t hi = n - 1;
    while (hi > 0) {
        std::size_t lo = hi;
        while (lo > 0) {
            const double sub = std::abs(t(lo, lo - 1));
            const double local = std::abs(t(lo - 1, lo - 1)) + std::abs(t(lo, lo));
            if (sub <= kEps * (local > 0.0 ? local : scale) || sub <= kEps * kEps * scale) {
                t(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            --hi;
            since_deflation = 0;
            continue;
        }
        if (++total > cap) {
            throw Error(ErrorKind::Convergence,
                        "QR iteration did not converge within " + std::to_string(cap) + " sweeps");
        }
        ++since_deflation;
        Complex mu = wilkinson_shift(t, hi);
        if (since_deflation % 11 == 10) {
            mu = t(hi, hi) + 1.5 * std::abs(t(hi, hi - 1)) * Complex(1.0, 0.5);
        }
        Complex x = t(lo, lo) - mu;
        Complex y = t(lo + 1, lo);
        for (std::size_t k = lo; k < hi; ++k) {
            const Givens g = givens(x, y);
            apply_rows(t, k, g);
            apply_columns_adjoint(t, k, g);
            apply_columns_adjoint(q, k, g);
            if (k > lo) {
                t(k + 1, k - 1) = 0.0;
            }
            if (k + 1 < hi) {
                x = t(k + 1, k);
                y = t(k + 2, k);
            }
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            t(i, j) = 0.0;
        }
    }
    return out;
}

std::vector<Complex> spectrum(const ComplexMatrix& m)
{
    if (!m.is_square()) {
        throw Error(ErrorKind::Size, "spectrum needs a square matrix");
    }
    if (m.is_upper_triangular()) {
        return m.diagonal_entries();
    }
    return schur(m).t.diagonal_entries();
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& h, double negativity_tol)
{
    const HermitianEigen e = hermitian_eigen(h);
    const std::size_t n = h.rows();
    ComplexMatrix scaled = e.vectors;
    double top = 1.0;
    for (double lambda : e.values) {
        top = std::max(top, std::abs(lambda));
    }
    // eigenvalues at roundoff level would otherwise leave roots near 1e-8
    const double snap = 64.0 * std::numeric_limits<double>::epsilon() * top;
    for (std::size_t k = 0; k < n; ++k) {
        double lambda = e.values[k];
        if (std::abs(lambda) <= snap) {
            lambda = 0.0;
        }
        if (lambda < -negativity_tol) {
            throw Error(ErrorKind::Negativity, "eigenvalue " + std::to_string(lambda) + " below -" +
                                                   std::to_string(negativity_tol));
        }
        const double root = std::sqrt(std::max(lambda, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            scaled(i, k) *= root;
        }
    }
    ComplexMatrix r = scaled * e.vectors.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
        r(i, i) = r(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = avg;
            r(j, i) = std::conj(avg);
        }
    }
    return r;
}

ComplexMatrix defect(const ComplexMatrix& t, double tolerance)
{
    const double norm = operator_norm(t);
    if (norm > 1.0 + tolerance) {
        throw Error(ErrorKind::NotContraction, "defect of a matrix with norm " + std::to_string(norm));
    }
    ComplexMatrix h = ComplexMatrix::identity(t.cols()) - t.adjoint() * t;
    // ||T|| <= 1 + tol puts the smallest eigenvalue of I - T*T at about -2 tol.
    return hermitian_sqrt(h, 3.0 * tolerance + 1e-14);
}

ComplexMatrix defect_adjoint(const ComplexMatrix& t, double tolerance)
{
    return defect(t.adjoint(), tolerance);
}

ContractionVerdict is_contraction(const ComplexMatrix& m, double tolerance)
{
    ContractionVerdict v;
    v.norm = operator_norm(m);
    v.margin = 1.0 - v.norm;
    v.tolerance = tolerance;
    v.is_contraction = v.norm <= 1.0 + tolerance;
    return v;
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double cutoff)
{
    const SingularValueDecomposition d = svd(m);
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t k = 0; k < d.sigma.size(); ++k) {
        if (d.sigma[k] <= cutoff) {
            continue;
        }
        const double inv = 1.0 / d.sigma[k];
        for (std::size_t i = 0; i < m.cols(); ++i) {
            const Complex vi = d.v(i, k) * inv;
            for (std::size_t j = 0; j < m.rows(); ++j) {
                out(i, j) += vi * std::conj(d.u(j, k));
            }
        }
    }
    return out;
}

ComplexMatrix kernel_projector(const ComplexMatrix& m, double cutoff)
{
    return ComplexMatrix::identity(m.cols()) - pseudo_inverse(m, cutoff) * m;
}

ComplexMatrix inverse(const ComplexMatrix& m)
{
    if (!m.is_square()) {
        throw Error(ErrorKind::Size, "inverse needs a square matrix");
    }
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Complex> e(n);
        e[j] = 1.0;
        const auto col = solve_linear_system(m.entries(), e, n);
        for (std::size_t i = 0; i < n; ++i) {
            out(i, j) = col[i];
        }
    }
    return out;
}

std::vector<Complex> solve_linear_system(std::vector<Complex> a, std::vector<Complex> b, std::size_t n)
{
    if (a.size() != n * n || b.size() != n) {
        throw Error(ErrorKind::Size, "linear system shape mismatch");
    }
    double scale = 0.0;
    for (const Complex& z : a) {
        scale = std::max(scale, std::abs(z));
    }
    const double floor = 1e-14 * scale;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a[i * n + k]) > std::abs(a[pivot * n + k])) {
                pivot = i;
            }
        }
        if (std::abs(a[pivot * n + k]) <= floor || scale == 0.0) {
            throw Error(ErrorKind::Singular, "linear system is numerically singular");
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[k * n + j], a[pivot * n + j]);
            }
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a[i * n + k] / a[k * n + k];
            if (f == Complex{}) {
                continue;
            }
            for (std::size_t j = k; j < n; ++j) {
                a[i * n + j] -= f * a[k * n + j];
            }
            b[i] -= f * b[k];
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Complex s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= a[i * n + j] * x[j];
        }
        x[i] = s / a[i * n + i];
    }
    return x;
}

} // namespace oplab
