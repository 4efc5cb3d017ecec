#include "doctest.h"
#include "kricker/matrix.hpp"

#include <random>

using namespace kricker;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937& g, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> c(-3, 3);
    LaurentPoly p;
    for (int e = lo; e <= hi; ++e) p.add_term(e, make_q(c(g), 1 + (g() % 2)));
    return p;
}

}  // namespace

TEST_CASE("laurent arithmetic and involution") {
    CHECK(P("t^2 - 3t + 1/2").bar() == P("t^-2 - 3t^-1 + 1/2"));
    CHECK(P("t + 1") * P("t^-1 + 1") == P("t + 2 + t^-1"));
    CHECK(P("t - 1 + t^-1").eval(1) == 1);
    CHECK(P("0").is_zero());
}

TEST_CASE("laurent text format round trip") {
    LaurentPoly p = P("-3/4*t^-2 + 5 + 2*t^3");
    CHECK(p.str() == "-3/4*t^-2 + 5*t^0 + 2*t^3");
    CHECK(LaurentPoly::parse(p.str()) == p);
    CHECK(LaurentPoly().str() == "0");
    CHECK_THROWS(LaurentPoly::parse("t^"));
}

TEST_CASE("laurent ring properties on random samples") {
    std::mt19937 g(7);
    for (int k = 0; k < 20; ++k) {
        LaurentPoly a = random_poly(g), b = random_poly(g);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK(a.bar().bar() == a);
        Rational q = make_q(k + 2, 3);
        CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
        CHECK((a + b).eval(q) == a.eval(q) + b.eval(q));
    }
}

TEST_CASE("fraction normalization") {
    RationalFraction f(P("t^2 - 1"), P("t - 1"));
    CHECK(f.den() == LaurentPoly(1));
    CHECK(f.num() == P("t + 1"));
    RationalFraction g(P("2t"), P("4"));
    CHECK(g.num() == P("1/2 t"));
    CHECK(g.is_polynomial());
    RationalFraction h(P("1"), P("t - 1 + t^-1"));
    CHECK(h.den() == P("1 - t + t^2"));
    CHECK(h.num() == P("t"));
    CHECK_THROWS_WITH(RationalFraction(P("1"), LaurentPoly()), "not a fraction");
    CHECK(RationalFraction(P("t^3"), P("t^5")) == RationalFraction(P("1"), P("t^2")));
}

TEST_CASE("matrix inverse") {
    PolyMatrix a(1, 1);
    a(0, 0) = P("t - 1 + t^-1");
    FracMatrix ai = matrix_inverse(a);
    CHECK(ai(0, 0) == RationalFraction(P("1"), P("t - 1 + t^-1")));

    PolyMatrix b(2, 2);
    b(0, 1) = b(1, 0) = LaurentPoly(3);
    FracMatrix bi = matrix_inverse(b);
    CHECK(bi(0, 0).is_zero());
    CHECK(bi(0, 1) == RationalFraction(P("1/3")));

    PolyMatrix s(2, 2);
    s(0, 0) = LaurentPoly(1);
    s(0, 1) = LaurentPoly(1);
    s(1, 0) = LaurentPoly(1);
    s(1, 1) = LaurentPoly(1);
    CHECK_THROWS_WITH(matrix_inverse(s), "degenerate presentation");
}

TEST_CASE("inverse of the perturbed block matrix") {
    // W-hat = [[W1, z, 0], [z*, l, -1], [0, -1, 0]]
    PolyMatrix w(4, 4);
    w(0, 0) = P("t - 1 + t^-1");
    w(0, 1) = P("1 + t");
    w(1, 0) = P("1 + t^-1");
    w(1, 1) = P("2");
    w(0, 2) = P("t");
    w(2, 0) = P("t^-1");
    w(1, 2) = P("3");
    w(2, 1) = P("3");
    w(2, 2) = P("t + t^-1");
    w(2, 3) = P("-1");
    w(3, 2) = P("-1");
    REQUIRE(w.is_hermitian());
    FracMatrix wi = matrix_inverse(w);
    PolyMatrix w1(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) w1(i, j) = w(i, j);
    FracMatrix w1i = matrix_inverse(w1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(wi(i, j) == w1i(i, j));
    CHECK(wi(3, 3) != RationalFraction());
    CHECK(wi(2, 2).is_zero());
    FracMatrix prod = to_fractions(w) * wi;
    CHECK(prod == FracMatrix::identity(4));
}

TEST_CASE("hermitian inverses stay hermitian") {
    std::mt19937 g(11);
    int tested = 0;
    for (int trial = 0; trial < 40 && tested < 12; ++trial) {
        int n = 1 + trial % 4;
        PolyMatrix w(n, n);
        for (int i = 0; i < n; ++i) {
            LaurentPoly d = random_poly(g, 0, 1);
            w(i, i) = d + d.bar();
            for (int j = i + 1; j < n; ++j) {
                w(i, j) = random_poly(g, -1, 1);
                w(j, i) = w(i, j).bar();
            }
        }
        if (determinant(w).is_zero()) continue;
        ++tested;
        FracMatrix wi = matrix_inverse(w);
        CHECK(wi.conj_transpose() == wi);
        CHECK(to_fractions(w) * wi == FracMatrix::identity(n));
    }
    CHECK(tested >= 10);
}

TEST_CASE("bareiss determinant agrees with expansion") {
    PolyMatrix m(3, 3);
    m(0, 0) = P("t");
    m(0, 1) = P("1");
    m(1, 0) = P("1");
    m(1, 1) = P("t^-1");
    m(1, 2) = P("2");
    m(2, 1) = P("2");
    m(2, 2) = P("1 + t");
    LaurentPoly expect = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2));
    CHECK(determinant(m) == expect);
}
