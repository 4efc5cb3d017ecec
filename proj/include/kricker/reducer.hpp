#pragma once

#include "kricker/blanchfield.hpp"
#include "kricker/series.hpp"

#include <memory>
#include <set>
#include <unordered_set>

namespace kricker {

// A diagram space: grading, label flip, which relations hold and how raw diagrams normalise.
class Space {
public:
    // gauge: Hol is built into the canonical form instead of generated as relations.
    Space(Grading g, int flip, bool hol, bool gauge = false) : g_(g), m_(flip), hol_(hol), gauge_(gauge && hol) {}
    virtual ~Space() = default;

    Grading grading() const { return g_; }
    int flip() const { return m_; }
    bool has_hol() const { return hol_; }
    bool gauge() const { return gauge_; }
    // Expansion of the constant 1 as labels t^j with coefficients (unit edge label).
    virtual std::vector<std::pair<int, Rational>> unit() const { return {{0, Rational(1)}}; }
    virtual void add_normalized(const Diagram& d, const Rational& c, Series& out) const { out.add(d, c); }

    Series series(int N) const { return Series(N, g_, m_, gauge_); }
    Series normalize(const Series& s) const;

private:
    Grading g_;
    int m_;
    bool hol_;
    bool gauge_;
};

// Interval diagrams: legs (component, position), no beads.
std::shared_ptr<Space> interval_space();
// Beaded diagrams with legs coloured (colour, 0).
std::shared_ptr<Space> beaded_space();
// Closed diagrams with edges t^k / delta.
std::shared_ptr<Space> delta_space(const LaurentPoly& delta);

// Diagrams with legs t^e x_i in the module of a presentation. Legs are kept in
// the monomial Hermite basis; relations tW c on a leg are traded for joined diagrams.
class ColoredSpace : public Space {
public:
    explicit ColoredSpace(BlanchfieldPresentation bp) : Space(Grading::IDegree, 0, true), bp_(std::move(bp)) {}
    const BlanchfieldPresentation& presentation() const { return bp_; }
    void add_normalized(const Diagram& d, const Rational& c, Series& out) const override;
    // Implicit edge value joining legs t^e x_i and t^e' x_j.
    RationalFraction f(int i, int e, int j, int e2) const;

private:
    BlanchfieldPresentation bp_;
};

struct ReducerBudget {
    long diagrams = 20000;
    int window = 3;
};

// Normal forms modulo Hol and IHX in a finite window of the relation closure.
class Reducer {
public:
    explicit Reducer(std::shared_ptr<const Space> space, ReducerBudget budget = {}, bool parallel = true);

    Series reduce(const Series& s);
    // "equal" when the difference lies in the explored relation span, "unresolved" otherwise.
    std::string equal_mod_relations(const Series& a, const Series& b);
    bool reduces_to_zero(const Series& s) { return reduce(s).is_zero(); }
    size_t explored() const { return seen_.size(); }
    size_t relations() const { return rows_.size(); }

    // Relations attached to one diagram; the serial reference used by the parallel generator.
    static std::vector<Series> relations_of(const Space& space, const Key& k, int N);

private:
    struct KeyHash {
        size_t operator()(const Key& k) const;
    };
    bool explore(const Series& s, bool extend_window);
    void insert_row(Series row);
    Series eliminate(Series s) const;

    std::shared_ptr<const Space> space_;
    ReducerBudget budget_;
    bool parallel_;
    std::unordered_set<Key, KeyHash> seen_;
    std::map<Key, Series> rows_;
    int lo_ = 0, hi_ = 0;
    bool window_set_ = false;
};

}  // namespace kricker
