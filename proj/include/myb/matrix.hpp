#ifndef MYB_MATRIX_HPP
#define MYB_MATRIX_HPP

#include "myb/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace myb {

using Vec = std::vector<Rational>;

// Dense rational matrix with immutable dimensions.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vec& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Rational& c) const;
    Matrix transposed() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_scalar() const;  // multiple of the identity

    Vec mul_vec(const Vec& x) const;
    Vec flatten() const { return data_; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Exact Gaussian elimination, pivot = first nonzero entry in row-major order.
// Returns some x with A*x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& A, const Vec& b);

std::size_t rank(const Matrix& A);

Rational determinant(const Matrix& A);

// Coefficients expressing target in the span of the given columns, or nullopt.
std::optional<Vec> span_membership(const std::vector<Vec>& vectors, const Vec& target);

}  // namespace myb

#endif
