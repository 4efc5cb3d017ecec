#include "kricker/blanchfield.hpp"

#include <stdexcept>

namespace kricker {

ModuleElement ModuleElement::generator(int n, int i, int e) {
    ModuleElement v(n);
    v.c[i] = LaurentPoly::t(e);
    return v;
}

bool ModuleElement::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    if (c.size() != o.c.size()) throw std::invalid_argument("dimension mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

ModuleElement ModuleElement::scaled(const LaurentPoly& p) const {
    ModuleElement r = *this;
    for (auto& x : r.c) x = x * p;
    return r;
}

namespace {

void column_axpy(PolyMatrix& m, int dst, const LaurentPoly& q, int src) {
    for (int i = 0; i < m.rows(); ++i)
        if (!m(i, src).is_zero()) m(i, dst) -= q * m(i, src);
}

void column_scale(PolyMatrix& m, int j, const LaurentPoly& u) {
    for (int i = 0; i < m.rows(); ++i) m(i, j) = m(i, j) * u;
}

void column_swap(PolyMatrix& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// Column Hermite form H = M U over the PID Q[t^+-1].
void hermite_columns(const PolyMatrix& M, PolyMatrix& H, PolyMatrix& U) {
    int n = M.rows();
    H = M;
    U = PolyMatrix::identity(n);
    for (int r = n - 1; r >= 0; --r) {
        while (true) {
            int best = -1, nonzero = 0;
            for (int j = 0; j <= r; ++j) {
                if (H(r, j).is_zero()) continue;
                ++nonzero;
                LaurentPoly u = LaurentPoly::t(-H(r, j).low());
                column_scale(H, j, u);
                column_scale(U, j, u);
                if (best < 0 || H(r, j).high() < H(r, best).high()) best = j;
            }
            if (best < 0) throw std::domain_error("degenerate presentation");
            if (nonzero == 1) {
                column_swap(H, best, r);
                column_swap(U, best, r);
                break;
            }
            for (int j = 0; j <= r; ++j) {
                if (j == best || H(r, j).is_zero()) continue;
                LaurentPoly q = poly_divmod(H(r, j), H(r, best)).first;
                column_axpy(H, j, q, best);
                column_axpy(U, j, q, best);
            }
        }
        LaurentPoly u = LaurentPoly(Rational(1) / H(r, r).lead());
        column_scale(H, r, u);
        column_scale(U, r, u);
    }
}

}  // namespace

BlanchfieldPresentation BlanchfieldPresentation::from_matrix(const PolyMatrix& W) {
    if (!W.is_hermitian()) throw std::invalid_argument("non-hermitian matrix");
    if (determinant(eval_matrix(W, 1)) == 0) throw std::domain_error("degenerate presentation");
    BlanchfieldPresentation b;
    b.W_ = W;
    int n = W.rows();
    LaurentPoly d = determinant(W);
    b.delta_ = d.monic_normalized();
    FracMatrix inv = matrix_inverse(W);
    b.B_ = FracMatrix(n, n);
    b.Bnum_ = PolyMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            b.B_(i, j) = -inv(i, j);
            b.Bnum_(i, j) = b.B_(i, j).numerator_over(b.delta_);
        }
    hermite_columns(W.transpose(), b.H_, b.U_);
    return b;
}

int BlanchfieldPresentation::basis_size() const {
    int s = 0;
    for (int i = 0; i < rank(); ++i) s += pivot_degree(i);
    return s;
}

BlanchfieldPresentation::Reduction BlanchfieldPresentation::reduce(const ModuleElement& v) const {
    int n = rank();
    if (static_cast<int>(v.c.size()) != n) throw std::invalid_argument("dimension mismatch");
    Reduction r;
    r.rem = v;
    std::vector<LaurentPoly> ch(n);
    for (int i = n - 1; i >= 0; --i) {
        LaurentPoly q;
        r.rem.c[i] = laurent_mod(r.rem.c[i], H_(i, i), &q);
        if (q.is_zero()) continue;
        ch[i] = q;
        for (int k = 0; k < i; ++k)
            if (!H_(k, i).is_zero()) r.rem.c[k] -= q * H_(k, i);
    }
    r.quot.assign(n, LaurentPoly());
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (!ch[i].is_zero() && !U_(k, i).is_zero()) r.quot[k] += U_(k, i) * ch[i];
    return r;
}

bool BlanchfieldPresentation::equal(const ModuleElement& a, const ModuleElement& b) const {
    ModuleElement d = a;
    d += b.scaled(LaurentPoly(-1));
    return normal_form(d).is_zero();
}

RationalFraction BlanchfieldPresentation::pairing(const ModuleElement& u, const ModuleElement& v) const {
    int n = rank();
    if (static_cast<int>(u.c.size()) != n || static_cast<int>(v.c.size()) != n)
        throw std::invalid_argument("dimension mismatch");
    LaurentPoly num;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!u.c[i].is_zero() && !v.c[j].is_zero()) num += u.c[i] * Bnum_(i, j) * v.c[j].bar();
    return RationalFraction(num, delta_);
}

}  // namespace kricker
