#include "doctest.h"
#include "kricker/kontsevich.hpp"
#include "kricker/reducer.hpp"
#include "kricker/winding.hpp"

#include <string>

using namespace kricker;

namespace {

const std::string kCorpus = KRICKER_CORPUS_DIR;

bool equal_beaded(const Series& a, const Series& b) {
    Reducer r(beaded_space());
    return r.equal_mod_relations(a, b) == "equal";
}

Series zc(const std::string& text, int N) { return z_circle(parse_program(text), N); }

const char* kTrefoil = "cup 0 rl\ncup 1 lr\ndisk 2 2\nx+ 1\nx+ 1\ncup 1 lr\nx- 0\ncap 0\ncap 0\ncap 0\n";

}  // namespace

TEST_CASE("associator solves pentagon and hexagons") {
    for (int N = 1; N <= 3; ++N) {
        Associator a = compute_associator(N);
        CHECK(associator_residuals(a).all_zero());
        CHECK((a.phi * a.phi_inverse) == HPoly::one(3, N));
    }
    CHECK(compute_associator(1).phi == HPoly::one(3, 1));
    CHECK(compute_associator(2).a == Rational(1, 24));
}

TEST_CASE("horizontal quotient dimensions on three strands") {
    HorizontalQuotient q(3, 3);
    // t12 + t13 + t23 is central and the rest is free on two generators
    CHECK(q.dimension(1) == 3);
    CHECK(q.dimension(2) == 7);
    CHECK(q.dimension(3) == 15);
}

TEST_CASE("nu agrees for both snakes and starts in degree two") {
    Associator a = compute_associator(3);
    StrandSeries r = compute_nu(a, 3, true), l = compute_nu(a, 3, false);
    for (const auto& [w, c] : r) CHECK(w.size() != 2);
    ChiInverse inv;
    Series br = inv(strand_series_to_interval(r, 3)), bl = inv(strand_series_to_interval(l, 3));
    CHECK(equal_beaded(br, bl));
    // the degree two part is a single wheel with two spokes
    int wheels = 0;
    for (const auto& [k, c] : br.terms())
        if (!decode(k).nodes.empty()) {
            ++wheels;
            CHECK(abs(c) == Rational(1, 48));
        }
    CHECK(wheels == 1);
}

TEST_CASE("elementary crossing value") {
    std::vector<bool> up2 = {true, true};
    for (int sign : {1, -1}) {
        MorphismSeries x = crossing_value(up2, 0, sign, 2);
        REQUIRE(x.terms().size() == 3);
        for (const auto& [t, c] : x.terms()) {
            size_t chords = t[0].size();
            Rational want = chords == 0 ? Rational(1) : chords == 1 ? Rational(sign, 2) : Rational(1, 8);
            CHECK(c == want);
        }
    }
    CHECK_THROWS(crossing_value(up2, 1, 1, 2));
}

TEST_CASE("composition and tensor laws") {
    MorphismSeries f = crossing_value({true, false}, 0, 1, 2);
    MorphismSeries g = crossing_value({true, true}, 0, -1, 2);
    MorphismSeries id2b = MorphismSeries::identity({true, true}, 2);
    CHECK(compose(f, MorphismSeries::identity(f.source(), 2)) == f);
    CHECK(compose(MorphismSeries::identity(f.target(), 2), f) == f);
    CHECK(tensor(f, MorphismSeries::identity({}, 2)) == f);
    MorphismSeries both = tensor(f, g);
    CHECK(compose(tensor(f, id2b), tensor(MorphismSeries::identity(f.source(), 2), g)) == both);
    CHECK(compose(tensor(MorphismSeries::identity(f.target(), 2), g), tensor(f, id2b)) == both);
    CHECK_THROWS(compose(f, g));
}

TEST_CASE("the empty program has trivial value") {
    TangleProgram p = load_program(kCorpus + "/empty.pres");
    Series z = z_bullet(p, 2);
    CHECK(z == Series::one(3, Grading::VertexDegree));
}

TEST_CASE("lifted values are group-like") {
    for (const char* name : {"u_plus", "trefoil", "fig8", "borromean", "h1_twelve"}) {
        TangleProgram p = load_program(kCorpus + "/" + name + ".pres");
        CHECK_MESSAGE(z_bullet(p, 2).is_group_like(true), name);
        CHECK_MESSAGE(z_circle(p, 2).is_group_like(), name);
        CHECK_NOTHROW(lift_and_split(p, 2));
    }
}

TEST_CASE("lifted linking matrix equals the winding matrix") {
    for (const char* name : {"empty", "u_plus", "u_minus", "fig8", "trefoil", "figure_eight", "borromean",
                             "unlink3", "h1_twelve"}) {
        TangleProgram p = load_program(kCorpus + "/" + name + ".pres");
        Gaussian g = lift_and_split(p, 1);
        CHECK_MESSAGE(g.W == winding_matrix(p).W, name);
    }
}

TEST_CASE("Borromean rings carry a unit Y and the unlink does not") {
    Gaussian b = lift_and_split(load_program(kCorpus + "/borromean.pres"), 1);
    Gaussian u = lift_and_split(load_program(kCorpus + "/unlink3.pres"), 1);
    CHECK(u.H == Series::one(1, Grading::IDegree, 0, true));
    REQUIRE(b.H.size() == 2);
    for (const auto& [k, c] : b.H.terms()) {
        Diagram d = decode(k);
        if (d.nodes.empty()) continue;
        CHECK(abs(c) == 1);
        CHECK(d.nodes.size() == 4);
    }
}

TEST_CASE("Reidemeister moves preserve the lifted value") {
    const int N = 2;
    Series base = zc(kTrefoil, N);
    // second move on parallel and antiparallel strands
    const char* r2[] = {
        "cup 0 rl\ncup 1 lr\nx+ 1\nx- 1\ndisk 2 2\nx+ 1\nx+ 1\ncup 1 lr\nx- 0\ncap 0\ncap 0\ncap 0\n",
        "cup 0 rl\ncup 1 lr\ndisk 2 2\nx+ 1\nx+ 1\nx- 2\nx+ 2\ncup 1 lr\nx- 0\ncap 0\ncap 0\ncap 0\n",
        "cup 0 rl\ncup 1 lr\ndisk 2 2\nx+ 1\nx+ 1\ncup 1 lr\nx- 0\nx+ 0\nx- 0\ncap 0\ncap 0\ncap 0\n",
    };
    for (const char* t : r2) CHECK_MESSAGE(equal_beaded(zc(t, N), base), t);
    // a snake straightens
    CHECK(equal_beaded(zc("cup 0 rl\ndisk 0 0\ncup 1 lr\ncap 0\ncap 0\n", N), zc("cup 0 rl\ndisk 0 0\ncap 0\n", N)));

    // third move on three upward strands of a closed braid
    const char* pre = "cup 0 rl\ncup 1 rl\ncup 2 rl\ndisk 0 0\n";
    const char* post = "cap 2\ncap 1\ncap 0\n";
    Series a = zc(std::string(pre) + "x+ 0\nx+ 1\nx+ 0\n" + post, N);
    Series b = zc(std::string(pre) + "x+ 1\nx+ 0\nx+ 1\n" + post, N);
    CHECK(equal_beaded(a, b));
    Series c = zc(std::string(pre) + "x- 0\nx+ 1\nx+ 0\n" + post, N);
    Series d = zc(std::string(pre) + "x+ 1\nx+ 0\nx- 1\n" + post, N);
    CHECK(equal_beaded(c, d));
}

TEST_CASE("serial and parallel lifts agree") {
    TangleProgram p = parse_program(kTrefoil);
    ComponentMap c = trace_components(p);
    FunctorData data = functor_data(3);
    CHECK(z_circle(p, c, data, true) == z_circle(p, c, data, false));
}

TEST_CASE("degree beyond the associator is rejected") { CHECK_THROWS(functor_data(4)); }
