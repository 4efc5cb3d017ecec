#pragma once

#include "kricker/horizontal.hpp"
#include "kricker/pbw.hpp"
#include "kricker/presentation.hpp"

#include <limits>

namespace kricker {

// Tokens on a skeleton arc, listed along its orientation: chord ids >= 0 and markers < 0.
constexpr int kDiskUp = -1;
constexpr int kDiskDown = -2;
constexpr int base_marker(int component) { return -10 - component; }

// Arc endpoints: bottom j is j, top j is ~j, a closed arc has none.
constexpr int kNoEnd = std::numeric_limits<int>::min();
struct Arc {
    int tail = kNoEnd, head = kNoEnd;
    friend bool operator==(const Arc&, const Arc&) = default;
};

using ArcTokens = std::vector<std::vector<int>>;

// Chord diagrams on a tangle skeleton between two words of strand orientations (true = up).
class MorphismSeries {
public:
    MorphismSeries() = default;
    MorphismSeries(std::vector<bool> source, std::vector<bool> target, std::vector<Arc> arcs, int D);
    static MorphismSeries identity(const std::vector<bool>& word, int D);

    const std::vector<bool>& source() const { return source_; }
    const std::vector<bool>& target() const { return target_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::map<ArcTokens, Rational>& terms() const { return terms_; }
    int truncation() const { return D_; }

    // Renumbers chords by first appearance and drops terms above the truncation.
    void add(ArcTokens t, const Rational& c);
    friend bool operator==(const MorphismSeries& a, const MorphismSeries& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.arcs_ == b.arcs_ && a.terms_ == b.terms_;
    }
    friend MorphismSeries operator+(const MorphismSeries& a, const MorphismSeries& b);
    MorphismSeries scaled(const Rational& c) const;

private:
    std::vector<bool> source_, target_;
    std::vector<Arc> arcs_;
    int D_ = 0;
    std::map<ArcTokens, Rational> terms_;
};

// f after g (g below f).
MorphismSeries compose(const MorphismSeries& f, const MorphismSeries& g);
// g to the right of f.
MorphismSeries tensor(const MorphismSeries& f, const MorphismSeries& g);

// A chord between strand positions of the bottom word, chords listed bottom to top.
using ChordWord = std::vector<std::pair<int, int>>;
MorphismSeries chords_on_identity(const std::vector<bool>& word, const std::vector<std::pair<ChordWord, Rational>>& sum,
                                  int D);

// Polynomial on one interval: chord ids along the strand.
using StrandSeries = std::map<std::vector<int>, Rational>;

struct FunctorData {
    int D = 0;  // chord degree
    Associator phi;
    StrandSeries nu;
};
FunctorData functor_data(int D);

// nu from the snake that opens on the right; the other snake gives an independent value for tests.
StrandSeries compute_nu(const Associator& phi, int D, bool right_snake = true);
// Chord diagrams on one interval as an interval series on component 0.
Series strand_series_to_interval(const StrandSeries& s, int D);

MorphismSeries crossing_value(const std::vector<bool>& word, int p, int sign, int D);
MorphismSeries cup_value(const std::vector<bool>& word, int p, bool left_down, int D);
MorphismSeries cap_value(const std::vector<bool>& word, int p, const StrandSeries& nu, int D);
// Cabled associator (X Y) Z -> X (Y Z) on consecutive blocks starting at x0 with sizes nx, ny, nz.
MorphismSeries associator_value(const std::vector<bool>& word, int x0, int nx, int ny, int nz, const HPoly& phi, int D);
MorphismSeries marker_value(const std::vector<bool>& word, int strand, int token, int D);

// Closed program: all arcs are circles, each carrying its component's base marker.
MorphismSeries evaluate_program(const TangleProgram& p, const ComponentMap& c, const FunctorData& data);

// Cuts the circles at the base points; chords carry t^(s_p - s_q) from the disk passes.
// Optionally inserts one extra nu per component at the base point.
Series cut_at_base_points(const MorphismSeries& closed, int components, int D, const StrandSeries* nu = nullptr);

// Interval series on the components with vertex degree <= N + 1.
Series z_bullet(const TangleProgram& p, int N);
Series z_bullet(const TangleProgram& p, const ComponentMap& c, const FunctorData& data);
// Beaded series chi^-1(nu # Z-bullet) with vertex degree <= N + 1.
Series z_circle(const TangleProgram& p, int N);
Series z_circle(const TangleProgram& p, const ComponentMap& c, const FunctorData& data, bool parallel = true);

struct Gaussian {
    PolyMatrix W;
    Series H;  // beaded, i-degree grading, no struts
};
// Splits a group-like beaded series as exp(W/2) with H; throws when the log has a disconnected part.
Gaussian split_gaussian(const Series& zcircle, int components, int N);
Gaussian lift_and_split(const TangleProgram& p, int N);
Gaussian lift_and_split(const TangleProgram& p, const ComponentMap& c, int N);

}  // namespace kricker
