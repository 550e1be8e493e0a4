#include "oplab/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oplab {

namespace {

void check_shape(std::size_t rows, std::size_t cols)
{
    if (rows > ComplexMatrix::kMaxDim || cols > ComplexMatrix::kMaxDim) {
        throw Error(ErrorKind::Size, "matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                                         " exceeds the dimension cap of " +
                                         std::to_string(ComplexMatrix::kMaxDim));
    }
    if ((rows == 0) != (cols == 0)) {
        throw Error(ErrorKind::Size, "matrix with a zero and a nonzero dimension");
    }
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::Size, std::string("shape mismatch in ") + what);
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
    check_shape(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    check_shape(rows, cols);
    if (entries_.size() != rows * cols) {
        throw Error(ErrorKind::Size, "entry count does not match the shape");
    }
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::InvalidArgument, "non-finite matrix entry");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    check_shape(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::Size, "ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& values)
{
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const
{
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m(j, i) = (*this)(i, j);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const
{
    if (row + rows > rows_ || col + cols > cols_) {
        throw Error(ErrorKind::Size, "block out of range");
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = (*this)(row + i, col + j);
        }
    }
    return m;
}

void ComplexMatrix::set_block(std::size_t row, std::size_t col, const ComplexMatrix& source)
{
    if (row + source.rows() > rows_ || col + source.cols() > cols_) {
        throw Error(ErrorKind::Size, "block out of range");
    }
    for (std::size_t i = 0; i < source.rows(); ++i) {
        for (std::size_t j = 0; j < source.cols(); ++j) {
            (*this)(row + i, col + j) = source(i, j);
        }
    }
}

std::vector<Complex> ComplexMatrix::diagonal_entries() const
{
    std::vector<Complex> d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = (*this)(i, i);
    }
    return d;
}

Complex ComplexMatrix::trace() const
{
    Complex t = 0.0;
    for (const Complex& z : diagonal_entries()) {
        t += z;
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const
{
    double scale = max_abs();
    if (scale == 0.0) {
        return 0.0;
    }
    double sum = 0.0;
    for (const Complex& z : entries_) {
        sum += std::norm(z / scale);
    }
    return scale * std::sqrt(sum);
}

double ComplexMatrix::max_abs() const
{
    double m = 0.0;
    for (const Complex& z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool ComplexMatrix::is_upper_triangular(double tol) const
{
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < std::min(i, cols_); ++j) {
            if (std::abs((*this)(i, j)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexMatrix::is_hermitian(double tol) const
{
    if (!is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other)
{
    check_same_shape(*this, other, "addition");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other)
{
    check_same_shape(*this, other, "subtraction");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor)
{
    for (Complex& z : entries_) {
        z *= factor;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs)
{
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs)
{
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix m)
{
    m *= -1.0;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs)
{
    if (lhs.cols() != rhs.rows()) {
        throw Error(ErrorKind::Size, "inner dimensions differ in product");
    }
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex factor, ComplexMatrix m)
{
    m *= factor;
    return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex factor)
{
    m *= factor;
    return m;
}

ComplexMatrix block_matrix(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                           const ComplexMatrix& d)
{
    return vstack(hstack(a, b), hstack(c, d));
}

ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right)
{
    if (left.rows() != right.rows()) {
        throw Error(ErrorKind::Size, "row counts differ in hstack");
    }
    ComplexMatrix m(left.rows(), left.cols() + right.cols());
    m.set_block(0, 0, left);
    m.set_block(0, left.cols(), right);
    return m;
}

ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom)
{
    if (top.cols() != bottom.cols()) {
        throw Error(ErrorKind::Size, "column counts differ in vstack");
    }
    ComplexMatrix m(top.rows() + bottom.rows(), top.cols());
    m.set_block(0, 0, top);
    m.set_block(top.rows(), 0, bottom);
    return m;
}

double distance(const ComplexMatrix& lhs, const ComplexMatrix& rhs)
{
    return (lhs - rhs).frobenius_norm();
}

} // namespace oplab
