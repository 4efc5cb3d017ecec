#pragma once

#include "kricker/matrix.hpp"

#include <vector>

namespace kricker {

struct ModuleElement {
    std::vector<LaurentPoly> c;
    ModuleElement() = default;
    explicit ModuleElement(int n) : c(n) {}
    static ModuleElement generator(int n, int i, int e = 0);
    bool is_zero() const;
    friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.c == b.c; }
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement scaled(const LaurentPoly& p) const;
};

// The module Q[t^+-1]^n / tW Q[t^+-1]^n with pairing B = -W^-1.
class BlanchfieldPresentation {
public:
    static BlanchfieldPresentation from_matrix(const PolyMatrix& W);

    int rank() const { return W_.rows(); }
    const PolyMatrix& W() const { return W_; }
    const FracMatrix& B() const { return B_; }
    const LaurentPoly& delta() const { return delta_; }
    // Upper triangular generator matrix of the relation lattice, monic pivots.
    const PolyMatrix& hermite() const { return H_; }
    // deg of the i-th pivot: t^e x_i with 0 <= e < pivot_degree(i) is the monomial basis.
    int pivot_degree(int i) const { return H_(i, i).high(); }
    int basis_size() const;

    // v = rem + tW * quot with rem in normal form.
    struct Reduction {
        ModuleElement rem;
        std::vector<LaurentPoly> quot;
    };
    Reduction reduce(const ModuleElement& v) const;
    ModuleElement normal_form(const ModuleElement& v) const { return reduce(v).rem; }
    bool equal(const ModuleElement& a, const ModuleElement& b) const;

    // sum_ij u_i(t) B_ij(t) v_j(t^-1)
    RationalFraction pairing(const ModuleElement& u, const ModuleElement& v) const;
    // delta * B_ij
    LaurentPoly pairing_numerator(int i, int j) const { return Bnum_(i, j); }

private:
    PolyMatrix W_, H_, U_, Bnum_;
    FracMatrix B_;
    LaurentPoly delta_;
};

}  // namespace kricker
