#pragma once

// Independent reference computations shared by the unit tests and the acceptance binary.

#include "kricker/moves.hpp"
#include "kricker/pbw.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace kricker::oracle {

// Adds d with edge e carrying polys[e], expanded into monomial labels.
inline void add_expanded(Diagram d, const std::vector<LaurentPoly>& polys, const Rational& c, Series& out) {
    std::vector<std::vector<std::pair<int, Rational>>> choices(polys.size());
    for (size_t e = 0; e < polys.size(); ++e)
        for (const auto& [k, q] : polys[e].terms()) choices[e].emplace_back(k, q);
    for (const auto& ch : choices)
        if (ch.empty()) return;
    std::vector<size_t> idx(polys.size(), 0);
    while (true) {
        Rational x = c;
        for (size_t e = 0; e < polys.size(); ++e) {
            d.label[e] = choices[e][idx[e]].first;
            x *= choices[e][idx[e]].second;
        }
        out.add(d, x);
        size_t e = 0;
        while (e < idx.size() && ++idx[e] == choices[e].size()) idx[e++] = 0;
        if (e == idx.size()) break;
    }
}

// Gaussian integration done directly: glue the legs of H pairwise along sign * W^-1, every edge over delta.
inline Series gluing(const Series& H, const PolyMatrix& W, const LaurentPoly& delta, int sign = -1) {
    FracMatrix f = matrix_inverse(W);
    Series out(H.truncation(), Grading::IDegree, delta.high(), true);
    for (const auto& [key, coeff] : H.terms()) {
        Diagram d = decode(key);
        std::vector<int> legs, tri;
        for (int v = 0; v < d.num_nodes(); ++v) (d.nodes[v].leg ? legs : tri).push_back(v);
        if (legs.size() % 2) continue;
        std::vector<int> index(d.num_nodes(), -1);
        for (size_t i = 0; i < tri.size(); ++i) index[tri[i]] = static_cast<int>(i);
        std::vector<int> pair(d.num_nodes(), -1);
        auto slot_of = [&](int node, int h) {
            const auto& s = d.nodes[node].he;
            return static_cast<int>(std::find(s.begin(), s.end(), h) - s.begin());
        };
        auto build = [&]() {
            Diagram y;
            for (size_t i = 0; i < tri.size(); ++i) {
                y.add_tri();
                y.nodes[i].he.assign(3, -1);
            }
            std::vector<LaurentPoly> polys;
            auto place = [&](int from, int fslot, int to, int tslot, const LaurentPoly& p) {
                int e = y.num_edges();
                y.label.push_back(0);
                y.owner.push_back(from);
                y.owner.push_back(to);
                y.nodes[from].he[fslot] = 2 * e;
                y.nodes[to].he[tslot] = 2 * e + 1;
                polys.push_back(p);
            };
            for (int e = 0; e < d.num_edges(); ++e) {
                int a = d.tail(e), b = d.head(e);
                if (d.nodes[a].leg || d.nodes[b].leg) continue;
                place(index[a], slot_of(a, 2 * e), index[b], slot_of(b, 2 * e + 1), delta.shift(d.label[e]));
            }
            for (int a : legs) {
                int b = pair[a];
                if (b < a) continue;
                int ha = d.nodes[a].he[0] ^ 1, hb = d.nodes[b].he[0] ^ 1;
                int ua = d.owner[ha], ub = d.owner[hb];
                if (d.nodes[ua].leg || d.nodes[ub].leg) throw std::domain_error("strut in H");
                // exponents read from each anchor toward its leg
                int alpha = d.out_label(ha, 0), beta = d.out_label(hb, 0);
                RationalFraction g = f(d.nodes[a].a, d.nodes[b].a) * RationalFraction(delta * LaurentPoly(sign));
                if (!g.is_polynomial()) throw std::logic_error("pairing times delta is not a polynomial");
                place(index[ua], slot_of(ua, ha), index[ub], slot_of(ub, hb), g.num().shift(alpha - beta));
            }
            add_expanded(y, polys, coeff, out);
        };
        auto match = [&](auto&& self) -> void {
            auto it = std::find_if(legs.begin(), legs.end(), [&](int l) { return pair[l] < 0; });
            if (it == legs.end()) {
                build();
                return;
            }
            int first = *it;
            for (int l : legs) {
                if (l == first || pair[l] >= 0) continue;
                pair[first] = l;
                pair[l] = first;
                self(self);
                pair[first] = pair[l] = -1;
            }
        };
        match(match);
    }
    return out;
}

// The pairing of z_tilde by direct integration: closed normalisation times the glued H.
inline Series kricker_by_gluing(const TangleProgram& p, int N) {
    Gaussian g = lift_and_split(p, N);
    Signatures s = linking_and_signatures(g.W);
    Series norm = normalization(s.sigma_plus, s.sigma_minus, N);
    LaurentPoly delta = colored_space(g.W)->presentation().delta();
    return gluing(norm, g.W, delta) * gluing(g.H, g.W, delta);
}

inline bool equal_in_delta(const Series& a, const Series& b, const LaurentPoly& delta) {
    Reducer r(delta_space(delta));
    return r.equal_mod_relations(a, b) == "equal";
}

// Every unitrivalent diagram with t trivalent vertices and l legs, colours 1..colours, labels 0..1.
inline void all_diagrams(int t, int l, int colours, Series& out) {
    int H = 3 * t + l;
    if (H % 2) return;
    auto owner = [&](int h) { return h < 3 * t ? h / 3 : t + h - 3 * t; };
    auto slot = [&](int h) { return h < 3 * t ? h % 3 : 0; };
    std::vector<int> mate(H, -1);
    std::vector<std::pair<int, int>> pairs;
    auto emit = [&]() {
        int E = static_cast<int>(pairs.size());
        std::vector<int> col(l, 1);
        while (true) {
            for (int mask = 0; mask < (1 << E); ++mask) {
                Diagram d;
                for (int i = 0; i < t; ++i) {
                    d.add_tri();
                    d.nodes[i].he.assign(3, -1);
                }
                for (int i = 0; i < l; ++i) {
                    d.add_leg(col[i], 0);
                    d.nodes[t + i].he.assign(1, -1);
                }
                for (int e = 0; e < E; ++e) {
                    auto [a, b] = pairs[e];
                    d.label.push_back((mask >> e) & 1);
                    d.owner.push_back(owner(a));
                    d.owner.push_back(owner(b));
                    d.nodes[owner(a)].he[slot(a)] = 2 * e;
                    d.nodes[owner(b)].he[slot(b)] = 2 * e + 1;
                }
                out.add(d, 1);
            }
            int i = 0;
            while (i < l && ++col[i] > colours) col[i++] = 1;
            if (i == l) break;
        }
    };
    auto rec = [&](auto&& self) -> void {
        int a = static_cast<int>(std::find(mate.begin(), mate.end(), -1) - mate.begin());
        if (a == H) {
            emit();
            return;
        }
        for (int b = a + 1; b < H; ++b) {
            if (mate[b] >= 0) continue;
            mate[a] = b;
            mate[b] = a;
            pairs.emplace_back(a, b);
            self(self);
            pairs.pop_back();
            mate[a] = mate[b] = -1;
        }
    };
    rec(rec);
}

// Gaussians related by pushing t^k through every leg of one colour, with the matching module change.
struct WindingPair {
    Gaussian g, h;
    PolyMatrix E;
};

inline std::vector<WindingPair> winding_pairs(const std::vector<Gaussian>& pool, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<WindingPair> out;
    for (int trial = 0; trial < count; ++trial) {
        const Gaussian& g = pool[rng() % pool.size()];
        int n = g.W.rows();
        int c = static_cast<int>(rng() % n);
        int k = static_cast<int>(rng() % 5) - 2;
        if (k == 0) k = 3;
        PolyMatrix E = PolyMatrix::identity(n);
        E(c, c) = LaurentPoly::t(k);
        out.push_back({g, Gaussian{E * g.W * E.conj_transpose(), push_monomial(g.H, c, k)}, E});
    }
    return out;
}

// The two closings of components 0 and 1 merged in either order; they differ by a link relation.
inline std::pair<Gaussian, Gaussian> link_pair(const TangleProgram& p, int N) {
    ComponentMap c = trace_components(p);
    if (c.size() != 2) throw std::invalid_argument("link pair needs two components");
    FunctorData data = functor_data(N + 1);
    Series lifted = cut_at_base_points(evaluate_program(p, c, data), 2, data.D, &data.nu);
    ChiInverse inv;
    return {split_gaussian(inv(merge_components(lifted, 0, 1, 0)), 1, N),
            split_gaussian(inv(merge_components(lifted, 1, 0, 0)), 1, N)};
}

// Stacked value against the disjoint union of the factors, up to renumbering components.
inline std::string stacking(const TangleProgram& lower, const TangleProgram& upper, int N) {
    ColoredValue v = z_tilde(stack_programs(lower, upper), N);
    ColoredValue du = disjoint_union(z_tilde(lower, N), z_tilde(upper, N));
    auto E = find_permutation(du.space->presentation().W(), v.space->presentation().W());
    if (!E) return "unresolved";
    return compare_values(transport_by(du, *E, v.space), v);
}

}  // namespace kricker::oracle
