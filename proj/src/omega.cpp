#include "kricker/omega.hpp"

#include <algorithm>
#include <mutex>

namespace kricker {

namespace {

// Exponent of the leg's module element after absorbing its edge label.
int leg_exponent(const Diagram& d, int v) {
    int h = d.nodes[v].he[0];
    int k = d.label[h / 2];
    return d.nodes[v].b + ((h & 1) ? k : -k);
}

Series colored_series(int N) { return Series(N, Grading::IDegree, 0, false); }

bool degenerate(const PolyMatrix& W) {
    return determinant(W).is_zero() || determinant(eval_matrix(W, 1)) == 0;
}

}  // namespace

std::shared_ptr<const ColoredSpace> colored_space(const PolyMatrix& W) {
    if (degenerate(W)) throw DegenerateGaussian();
    return std::make_shared<ColoredSpace>(BlanchfieldPresentation::from_matrix(W));
}

ColoredValue omega(const Gaussian& g) {
    ColoredValue v{colored_space(g.W), colored_series(g.H.truncation())};
    for (const auto& [k, c] : g.H.terms()) v.space->add_normalized(decode(k), c, v.series);
    return v;
}

const TangleProgram& unknot_program(int framing) {
    static const TangleProgram plus = parse_program("cup 0 rl\ndisk 0 0\ncup 1 lr\nx+ 0\ncap 0\ncap 0\n");
    static const TangleProgram minus = parse_program("cup 0 rl\ndisk 0 0\ncup 1 lr\nx- 0\ncap 0\ncap 0\n");
    if (framing == 1) return plus;
    if (framing == -1) return minus;
    throw std::invalid_argument("unknot framing must be +1 or -1");
}

Series normalization(int sigma_plus, int sigma_minus, int N) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Series> memo;
    auto log_of = [&](int framing) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({framing, N});
        if (it == memo.end()) {
            Series s = omega(lift_and_split(unknot_program(framing), N)).series;
            for (const auto& [k, c] : s.terms())
                if (key_legs(k) != 0) throw std::logic_error("unknot value with legs");
            it = memo.emplace(std::make_pair(framing, N), s.log_disjoint()).first;
        }
        return it->second;
    };
    Series l = log_of(1).scaled(-sigma_plus) + log_of(-1).scaled(-sigma_minus);
    return l.exp_disjoint();
}

ColoredValue z_tilde(const Gaussian& g, int N) {
    ColoredValue v = omega(g);
    Signatures s = linking_and_signatures(g.W);
    v.series = normalization(s.sigma_plus, s.sigma_minus, N) * v.series;
    return v;
}

ColoredValue z_tilde(const TangleProgram& p, int N) { return z_tilde(lift_and_split(p, N), N); }

Series augmentation(long h1_order, int N) {
    Series s = colored_series(N);
    for (long p = 2; p <= h1_order; ++p) {
        if (!is_prime(p) || h1_order % p) continue;
        Diagram d;
        d.isolated.push_back(static_cast<int>(p));
        s.add(d, rho_p(h1_order, p));
    }
    return s.exp_disjoint();
}

ColoredValue z_tilde_aug(const TangleProgram& p, int N) {
    Gaussian g = lift_and_split(p, N);
    ColoredValue v = z_tilde(g, N);
    long order = alexander_and_h1(g.W).h1_order;
    v.series = augmentation(order, N) * v.series;
    return v;
}

Series psi(const ColoredValue& v) {
    const BlanchfieldPresentation& bp = v.space->presentation();
    const LaurentPoly& delta = bp.delta();
    int N = v.series.truncation();
    Series out(N, Grading::IDegree, delta.high(), true);
    for (const auto& [key, coeff] : v.series.terms()) {
        Diagram d = decode(key);
        std::vector<int> legs = d.legs();
        if (legs.size() % 2) continue;
        for (int l : legs)
            if (d.nodes[d.leg_anchor(l)].leg) throw std::domain_error("strut in a coloured value");
        std::vector<int> partner(d.num_nodes(), -1);
        std::vector<std::pair<int, int>> pairs;
        auto emit = [&]() {
            Diagram y = d;
            std::vector<bool> dn(y.num_nodes(), false), de(y.num_edges(), false);
            std::vector<LaurentPoly> polys;
            for (int e = 0; e < d.num_edges(); ++e) polys.push_back(delta.shift(d.label[e]));
            for (auto [a, b] : pairs) {
                join_legs_inplace(y, a, b, 0, dn, de);
                int i = d.nodes[a].a, j = d.nodes[b].a;
                polys.push_back(bp.pairing_numerator(i, j).shift(leg_exponent(d, a) - leg_exponent(d, b)));
            }
            de.resize(y.num_edges(), false);
            y.erase(dn, de);
            std::vector<LaurentPoly> kept;
            for (size_t e = 0; e < polys.size(); ++e)
                if (!de[e]) kept.push_back(polys[e]);
            if (std::any_of(kept.begin(), kept.end(), [](const LaurentPoly& p) { return p.is_zero(); })) return;
            // expand the product of edge numerators into monomial labels
            std::vector<std::map<int, Rational>::const_iterator> it;
            for (const auto& p : kept) it.push_back(p.terms().begin());
            while (true) {
                Rational c = coeff;
                for (size_t e = 0; e < kept.size(); ++e) {
                    y.label[e] = it[e]->first;
                    c *= it[e]->second;
                }
                out.add(y, c);
                size_t e = 0;
                for (; e < kept.size(); ++e) {
                    if (++it[e] != kept[e].terms().end()) break;
                    it[e] = kept[e].terms().begin();
                }
                if (e == kept.size()) break;
            }
        };
        auto match = [&](auto&& self) -> void {
            int first = -1;
            for (int l : legs)
                if (partner[l] < 0) {
                    first = l;
                    break;
                }
            if (first < 0) {
                emit();
                return;
            }
            for (int l : legs) {
                if (l == first || partner[l] >= 0) continue;
                partner[first] = l;
                partner[l] = first;
                pairs.emplace_back(first, l);
                self(self);
                pairs.pop_back();
                partner[first] = partner[l] = -1;
            }
        };
        match(match);
    }
    return out;
}

Series z_kricker(const TangleProgram& p, int N) { return psi(z_tilde(p, N)); }

ColoredValue transport(const ColoredValue& v, std::shared_ptr<const ColoredSpace> target,
                       const std::vector<ModuleElement>& images) {
    int n = v.space->presentation().rank(), m = target->presentation().rank();
    if (static_cast<int>(images.size()) != n) throw std::invalid_argument("transport: one image per generator");
    for (const auto& im : images)
        if (static_cast<int>(im.c.size()) != m) throw std::invalid_argument("transport: image of the wrong rank");
    ColoredValue out{target, colored_series(v.series.truncation())};
    for (const auto& [key, coeff] : v.series.terms()) {
        Diagram d = decode(key);
        std::vector<int> legs = d.legs();
        auto expand = [&](auto&& self, size_t idx, Diagram& y, const Rational& c) -> void {
            if (idx == legs.size()) {
                target->add_normalized(y, c, out.series);
                return;
            }
            int l = legs[idx];
            int i = d.nodes[l].a, b = d.nodes[l].b;
            for (int j = 0; j < m; ++j)
                for (const auto& [e, q] : images[i].c[j].terms()) {
                    y.nodes[l].a = j;
                    y.nodes[l].b = b + e;
                    self(self, idx + 1, y, c * q);
                }
        };
        Diagram y = d;
        expand(expand, 0, y, coeff);
    }
    return out;
}

ColoredValue transport_by(const ColoredValue& v, const PolyMatrix& E, std::shared_ptr<const ColoredSpace> target) {
    const PolyMatrix& W = v.space->presentation().W();
    if (E * W * E.conj_transpose() != target->presentation().W())
        throw std::invalid_argument("transport: matrices are not congruent by E");
    int n = E.cols(), m = E.rows();
    std::vector<ModuleElement> images(n, ModuleElement(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) images[i].c[j] = E(j, i).bar();
    return transport(v, std::move(target), images);
}

ColoredValue disjoint_union(const ColoredValue& a, const ColoredValue& b) {
    int na = a.space->presentation().rank();
    auto space = colored_space(block_diag(a.space->presentation().W(), b.space->presentation().W()));
    Series shifted = colored_series(b.series.truncation());
    for (const auto& [k, c] : b.series.terms()) {
        Diagram d = decode(k);
        for (int l : d.legs()) d.nodes[l].a += na;
        shifted.add(d, c);
    }
    return ColoredValue{space, space->normalize(a.series * shifted)};
}

std::string compare_values(const ColoredValue& a, const ColoredValue& b, ReducerBudget budget) {
    if (a.space->presentation().W() != b.space->presentation().W())
        throw std::invalid_argument("compare: values live in different modules");
    Reducer r(a.space, budget);
    return r.equal_mod_relations(a.series, b.series);
}

}  // namespace kricker
