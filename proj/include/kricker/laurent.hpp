#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace kricker {

using Rational = mpq_class;

inline Rational make_q(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
    LaurentPoly(long c);             // NOLINT
    static LaurentPoly monomial(const Rational& c, int e);
    static LaurentPoly t(int e = 1) { return monomial(1, e); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(int e) const;
    int low() const;   // lowest exponent; requires nonzero
    int high() const;  // highest exponent; requires nonzero
    Rational lead() const { return terms_.rbegin()->second; }

    void add_term(int e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly bar() const;
    LaurentPoly shift(int k) const;
    LaurentPoly scaled(const Rational& c) const;
    Rational eval(const Rational& q) const;
    bool is_symmetric() const { return *this == bar(); }

    // Normalized up to units c*t^k: lowest exponent 0, leading coefficient 1.
    LaurentPoly monic_normalized() const;
    // Up to units +-t^k: symmetric representative when one exists, else lowest exponent 0; positive leading coefficient.
    LaurentPoly unit_normalized() const;

    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    std::map<int, Rational> terms_;
};

// Division in Q[t^{+-1}] viewed through the shift to Q[t]; quotient and remainder of the shifted polynomials.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
// Exact quotient a/b; throws if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
// Monic gcd with lowest exponent 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
// v = q*p + r with the exponents of r in [0, deg p); p must have lowest exponent 0.
LaurentPoly laurent_mod(const LaurentPoly& v, const LaurentPoly& p, LaurentPoly* quot = nullptr);

class RationalFraction {
public:
    RationalFraction() : num_(), den_(1) {}
    RationalFraction(const LaurentPoly& p) : num_(p), den_(1) { normalize(); }  // NOLINT
    RationalFraction(long c) : RationalFraction(LaurentPoly(c)) {}              // NOLINT
    RationalFraction(const LaurentPoly& n, const LaurentPoly& d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == LaurentPoly(1); }

    RationalFraction operator-() const;
    friend RationalFraction operator+(const RationalFraction& a, const RationalFraction& b);
    friend RationalFraction operator-(const RationalFraction& a, const RationalFraction& b);
    friend RationalFraction operator*(const RationalFraction& a, const RationalFraction& b);
    friend RationalFraction operator/(const RationalFraction& a, const RationalFraction& b);
    RationalFraction& operator+=(const RationalFraction& o) { return *this = *this + o; }
    RationalFraction& operator-=(const RationalFraction& o) { return *this = *this - o; }
    RationalFraction& operator*=(const RationalFraction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFraction& a, const RationalFraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFraction& a, const RationalFraction& b) { return !(a == b); }

    RationalFraction bar() const;
    Rational eval(const Rational& q) const;
    // Numerator over a prescribed denominator d when den divides d.
    LaurentPoly numerator_over(const LaurentPoly& d) const;
    // Representative of the class modulo Q[t^+-1] with numerator exponents in [0, deg den).
    RationalFraction mod_polynomials() const;
    bool is_polynomial_class() const { return mod_polynomials().is_zero(); }

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

RationalFraction fraction_normalize(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace kricker
