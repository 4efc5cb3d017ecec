#pragma once

#include "kricker/laurent.hpp"

#include <map>
#include <vector>

namespace kricker {

// Words in the chords t_ij (i < j) between n strands; the left letter is on top.
using HWord = std::vector<int>;

int chord_letter(int n, int i, int j);
std::pair<int, int> letter_chord(int n, int letter);

// Truncated noncommutative polynomial in the chords of n strands.
struct HPoly {
    int n = 0;
    int D = 0;
    std::map<HWord, Rational> terms;

    HPoly() = default;
    HPoly(int strands, int degree) : n(strands), D(degree) {}
    static HPoly one(int n, int D);
    static HPoly chord(int n, int D, int i, int j, const Rational& c = 1);

    void add(const HWord& w, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    friend bool operator==(const HPoly& a, const HPoly& b) { return a.terms == b.terms; }
    HPoly scaled(const Rational& c) const;
    HPoly degree_part(int d) const;
};

HPoly commutator(const HPoly& a, const HPoly& b);
HPoly hexp(const HPoly& x);
// Inverse of a series with constant term 1.
HPoly hinverse(const HPoly& x);
// Letter k of p goes to images[k], a polynomial on the target strands.
HPoly substitute(const HPoly& p, const std::vector<HPoly>& images);

// Normal forms modulo [t_ij, t_ik + t_jk] = 0 and [t_ij, t_kl] = 0, degree by degree.
class HorizontalQuotient {
public:
    HorizontalQuotient(int n, int D);
    HPoly normal_form(const HPoly& p) const;
    int dimension(int d) const;

private:
    int n_, D_;
    // per degree: pivot word -> reduced row (pivot coefficient 1)
    std::vector<std::map<HWord, std::map<HWord, Rational>>> rows_;
};

// An even rational associator exp(a[t12,t23] + b1[t12,[t12,t23]] + b2[t23,[t12,t23]]) on three strands.
struct Associator {
    int degree = 0;
    Rational a, b1, b2;
    HPoly phi, phi_inverse;
};

Associator compute_associator(int N);

struct AssociatorResiduals {
    HPoly pentagon, hexagon_pos, hexagon_neg;
    bool all_zero() const { return pentagon.is_zero() && hexagon_pos.is_zero() && hexagon_neg.is_zero(); }
};
AssociatorResiduals associator_residuals(const Associator& phi);

}  // namespace kricker
