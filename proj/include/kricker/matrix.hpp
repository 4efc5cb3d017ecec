#pragma once

#include "kricker/laurent.hpp"

#include <vector>

namespace kricker {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix bar() const {
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].bar();
        return r;
    }
    Matrix conj_transpose() const { return bar().transpose(); }
    bool is_hermitian() const { return rows_ == cols_ && *this == conj_transpose(); }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("dimension mismatch");
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("dimension mismatch");
        Matrix r = x;
        for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using FracMatrix = Matrix<RationalFraction>;
using QMatrix = std::vector<std::vector<Rational>>;

FracMatrix to_fractions(const PolyMatrix& m);
QMatrix eval_matrix(const PolyMatrix& m, const Rational& q);
// Fraction-free (Bareiss) determinant.
LaurentPoly determinant(const PolyMatrix& m);
Rational determinant(const QMatrix& m);
// Gauss-Jordan over the fraction field; throws "degenerate presentation" if singular.
FracMatrix matrix_inverse(const PolyMatrix& m);
FracMatrix matrix_inverse(const FracMatrix& m);
// Direct sum of two square matrices.
PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix parse_matrix(const std::string& rows_text);

}  // namespace kricker
