#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "burnside/error.hpp"
#include "burnside/rational.hpp"
#include "burnside/rational_function.hpp"

namespace burnside {

/// Dense matrix over an exact field (Q or Q(t)).
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik == K(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: size mismatch in sum");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: size mismatch in difference");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> data_;
};

inline bool has_unit_denominator(const Rational& x) { return x.den() == 1; }
inline Rational denominator_lift(const Rational& x) { return Rational(x.den()); }
inline bool has_unit_denominator(const RationalFunction& x) { return x.den() == Polynomial(1); }
inline RationalFunction denominator_lift(const RationalFunction& x) {
    return RationalFunction(x.den());
}

/// Solves AX = B exactly by fraction-free (Bareiss) elimination: each row of
/// the augmented matrix is first scaled into the underlying domain (Z resp.
/// Q[t]), and the Bareiss recurrence keeps every intermediate value there,
/// bounding growth. Throws SingularMatrixError when A is not invertible.
template <class K>
Matrix<K> mat_solve(const Matrix<K>& A, const Matrix<K>& B) {
    if (A.rows() != A.cols()) throw std::invalid_argument("mat_solve: A must be square");
    if (B.rows() != A.rows()) throw std::invalid_argument("mat_solve: size mismatch");
    const std::size_t n = A.rows();
    const std::size_t m = B.cols();
    Matrix<K> M(n, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
        for (std::size_t j = 0; j < m; ++j) M(i, n + j) = B(i, j);
        for (std::size_t j = 0; j < n + m; ++j) {
            if (has_unit_denominator(M(i, j))) continue;
            K d = denominator_lift(M(i, j));
            for (std::size_t c = 0; c < n + m; ++c) M(i, c) = M(i, c) * d;
        }
    }

    const K zero(0);
    K prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M(piv, k) == zero) ++piv;
        if (piv == n) throw SingularMatrixError("mat_solve: singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < n + m; ++j) std::swap(M(k, j), M(piv, j));
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n + m; ++j)
                M(i, j) = (M(k, k) * M(i, j) - M(i, k) * M(k, j)) / prev;
            M(i, k) = K(0);
        }
        prev = M(k, k);
    }

    Matrix<K> X(n, m);
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t c = 0; c < m; ++c) {
            K s = M(i, n + c);
            for (std::size_t j = i + 1; j < n; ++j) s = s - M(i, j) * X(j, c);
            X(i, c) = s / M(i, i);
        }
    }
    return X;
}

/// Inverse of A, or SingularMatrixError.
template <class K>
Matrix<K> mat_inverse(const Matrix<K>& A) {
    return mat_solve(A, Matrix<K>::identity(A.rows()));
}

}  // namespace burnside
