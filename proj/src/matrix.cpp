#include "myb/matrix.hpp"

#include <stdexcept>

namespace myb {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vec& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix addition: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix subtraction: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] * c;
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool Matrix::is_scalar() const {
    if (rows_ != cols_ || rows_ == 0)
        return false;
    const Rational& d = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? d : Rational(0)))
                return false;
    return true;
}

Vec Matrix::mul_vec(const Vec& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                r[i] += (*this)(i, j) * x[j];
    return r;
}

namespace {

// Row-reduce the augmented matrix [A | b] in place; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t lhs_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < lhs_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(row, j), m(p, j));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<Vec> solve_linear(const Matrix& A, const Vec& b) {
    if (A.rows() != b.size())
        throw std::invalid_argument("solve_linear: A.rows != length(b)");
    Matrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j)
            aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    auto pivots = eliminate(aug, A.cols());
    for (std::size_t i = pivots.size(); i < A.rows(); ++i)
        if (aug(i, A.cols()) != 0)
            return std::nullopt;
    Vec x(A.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, A.cols());
    return x;
}

std::size_t rank(const Matrix& A) {
    Matrix m = A;
    return eliminate(m, A.cols()).size();
}

Rational determinant(const Matrix& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("determinant: square matrix required");
    Matrix m = A;
    Rational det = 1;
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0)
            ++p;
        if (p == n)
            return Rational(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(col, j), m(p, j));
            det = -det;
        }
        det *= m(col, col);
        Rational inv = Rational(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

std::optional<Vec> span_membership(const std::vector<Vec>& vectors, const Vec& target) {
    for (const auto& v : vectors)
        if (v.size() != target.size())
            throw std::invalid_argument("span_membership: column lengths differ");
    Matrix A(target.size(), vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (std::size_t i = 0; i < target.size(); ++i)
            A(i, j) = vectors[j][i];
    return solve_linear(A, target);
}

}  // namespace myb
