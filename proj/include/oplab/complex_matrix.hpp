#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "oplab/error.hpp"

namespace oplab {

/// Dense row-major complex matrix with at most kMaxDim rows and columns.
class ComplexMatrix
{
public:
    static constexpr std::size_t kMaxDim = 16;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<Complex>& values);
    static ComplexMatrix scalar(Complex value) { return ComplexMatrix(1, 1, {value}); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return entries_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    ComplexMatrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t row, std::size_t col, const ComplexMatrix& source);

    std::vector<Complex> diagonal_entries() const;
    Complex trace() const;

    double frobenius_norm() const;
    double max_abs() const;

    /// Strictly lower entries all have modulus <= tol.
    bool is_upper_triangular(double tol = 0.0) const;
    bool is_hermitian(double tol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex factor);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex factor, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex factor);

/// [[a, b], [c, d]]; empty blocks are not allowed.
ComplexMatrix block_matrix(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                           const ComplexMatrix& d);
ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right);
ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom);

/// Frobenius norm of lhs - rhs.
double distance(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

} // namespace oplab
