#include "kricker/matrix.hpp"

#include <sstream>

namespace kricker {

FracMatrix to_fractions(const PolyMatrix& m) {
    FracMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = RationalFraction(m(i, j));
    return r;
}

QMatrix eval_matrix(const PolyMatrix& m, const Rational& q) {
    QMatrix r(m.rows(), std::vector<Rational>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).eval(q);
    return r;
}

LaurentPoly determinant(const PolyMatrix& m0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m0.rows();
    if (n == 0) return LaurentPoly(1);
    PolyMatrix m = m0;
    LaurentPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return {};
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rational determinant(const QMatrix& m0) {
    QMatrix m = m0;
    int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

FracMatrix matrix_inverse(const FracMatrix& m0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m0.rows();
    FracMatrix a = m0, inv = FracMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) throw std::domain_error("degenerate presentation");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        RationalFraction piv = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) = a(k, j) / piv;
            inv(k, j) = inv(k, j) / piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            RationalFraction f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

FracMatrix matrix_inverse(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    if (determinant(m).is_zero()) throw std::domain_error("degenerate presentation");
    return matrix_inverse(to_fractions(m));
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

PolyMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<LaurentPoly>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line, ';')) {
        std::vector<LaurentPoly> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(LaurentPoly::parse(cell));
        rows.push_back(row);
    }
    int n = static_cast<int>(rows.size());
    PolyMatrix m(n, n == 0 ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols()) throw std::invalid_argument("ragged matrix");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace kricker
