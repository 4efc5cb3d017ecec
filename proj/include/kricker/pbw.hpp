#pragma once

#include "kricker/reducer.hpp"

#include <mutex>
#include <set>
#include <unordered_map>

namespace kricker {

// Interval diagrams carry legs (component, position); beaded diagrams on *_C carry legs (colour, 0).
Diagram forget_positions(const Diagram& interval);
// Renumbers positions on each component to 0..k-1 keeping their order.
void compact_positions(Diagram& interval);

// Average over all orders of the legs of each colour.
Series chi(const Series& beaded, bool parallel = true);

// Inverse of chi through STU, memoised per canonical interval key; results are in the gauge-fixed beaded space.
// When `only` is nonempty, legs on other components are already beaded and their positions are ignored.
class ChiInverse {
public:
    explicit ChiInverse(bool parallel = true, std::set<int> only = {}) : parallel_(parallel), only_(std::move(only)) {}
    Series operator()(const Series& interval);
    const Series& of_key(const Key& k);

private:
    Series direct(const Diagram& x);
    bool parallel_;
    std::set<int> only_;
    std::map<Key, Series> memo_;
};

// STU expansion of moving the legs of x into the given order (per component, a list of leg nodes
// from bottom to top): x = x_target + sum of returned terms.
void stu_path(const Diagram& x, const std::vector<std::vector<int>>& target, const Rational& c, Series& out);

// Glue every c-leg to a cbar-leg, summed over bijections.
void contract_bracket(const Diagram& d, int c, int cbar, const Rational& coeff, Series& out);
Series contract_bracket(const Series& s, int c, int cbar);

// The substitution c -> c e^{sign h}: trivalent vertices with h-legs inserted next to each c-leg.
void push_exponential(const Diagram& d, int c, int h, int sign, const Rational& coeff, Series& out);
Series push_exponential(const Series& s, int c, int h, int sign = 1);

// Multiplies edges at c-legs by t^k when oriented away from the leg and t^-k otherwise.
Diagram push_monomial(const Diagram& d, int c, int k);
Series push_monomial(const Series& s, int c, int k);

// log(e^k e^h) on the colour n as a series in the colours kbar, hbar (vertex degree <= N <= 3).
Series bch_lambda(int n, int kbar, int hbar, int N);

// Distribute the legs of component i between i and a new component inew.
Series duplicate_component(const Series& interval, int i, int inew);
// Concatenate component j (below) with component i2 (above) into component jnew.
Series merge_components(const Series& interval, int j, int i2, int jnew);

}  // namespace kricker
