#include "kricker/reducer.hpp"

#include <algorithm>

namespace kricker {

Series Space::normalize(const Series& s) const {
    Series out(s.truncation(), g_, m_, gauge_);
    for (const auto& [k, c] : s.terms()) add_normalized(decode(k), c, out);
    return out;
}

namespace {

class DeltaSpace : public Space {
public:
    explicit DeltaSpace(const LaurentPoly& delta) : Space(Grading::IDegree, delta.high(), true, true) {
        for (const auto& [j, c] : delta.terms()) unit_.emplace_back(j, c);
    }
    std::vector<std::pair<int, Rational>> unit() const override { return unit_; }

private:
    std::vector<std::pair<int, Rational>> unit_;
};

// Makes leg edge labels zero and oriented toward the leg, moving the exponent into the leg label.
void absorb_leg_labels(Diagram& x) {
    for (int v = 0; v < x.num_nodes(); ++v) {
        if (!x.nodes[v].leg) continue;
        int h = x.nodes[v].he[0], e = h / 2;
        int other = x.owner[h ^ 1];
        if (x.nodes[other].leg) {
            if (x.label[e] != 0) {
                x.nodes[x.head(e)].b += x.label[e];
                x.label[e] = 0;
            }
            continue;
        }
        if (h & 1) {
            x.nodes[v].b += x.label[e];
        } else {
            x.nodes[v].b -= x.label[e];
            auto& slots = x.nodes[other].he;
            *std::find(slots.begin(), slots.end(), h ^ 1) = h;
            x.nodes[v].he[0] = h ^ 1;
            std::swap(x.owner[h], x.owner[h ^ 1]);
        }
        x.label[e] = 0;
    }
}

}  // namespace

std::shared_ptr<Space> interval_space() { return std::make_shared<Space>(Grading::VertexDegree, 0, false); }
std::shared_ptr<Space> beaded_space() { return std::make_shared<Space>(Grading::VertexDegree, 0, true, true); }
std::shared_ptr<Space> delta_space(const LaurentPoly& delta) { return std::make_shared<DeltaSpace>(delta); }

RationalFraction ColoredSpace::f(int i, int e, int j, int e2) const {
    return RationalFraction(LaurentPoly::t(e - e2)) * bp_.B()(i, j);
}

void ColoredSpace::add_normalized(const Diagram& d, const Rational& c, Series& out) const {
    int n = bp_.rank();
    std::vector<std::pair<Diagram, Rational>> work{{d, c}};
    while (!work.empty()) {
        auto [x, cx] = std::move(work.back());
        work.pop_back();
        absorb_leg_labels(x);
        int target = -1;
        for (int v = 0; v < x.num_nodes() && target < 0; ++v) {
            if (!x.nodes[v].leg || x.nodes[x.leg_anchor(v)].leg) continue;
            int i = x.nodes[v].a, e = x.nodes[v].b;
            if (i < 0 || i >= n) throw std::invalid_argument("leg colour outside the presentation");
            if (e < 0 || e >= bp_.pivot_degree(i)) target = v;
        }
        if (target < 0) {
            out.add(x, cx);
            continue;
        }
        auto red = bp_.reduce(ModuleElement::generator(n, x.nodes[target].a, x.nodes[target].b));
        for (int j = 0; j < n; ++j)
            for (const auto& [e, q] : red.rem.c[j].terms()) {
                Diagram y = x;
                y.nodes[target].a = j;
                y.nodes[target].b = e;
                work.emplace_back(std::move(y), cx * q);
            }
        for (int w = 0; w < x.num_nodes(); ++w) {
            if (w == target || !x.nodes[w].leg) continue;
            LaurentPoly P = -red.quot[x.nodes[w].a].shift(-x.nodes[w].b);
            for (const auto& [k, q] : P.terms()) work.emplace_back(join_legs(x, target, w, k), cx * q);
        }
    }
}

// ---------------------------------------------------------------------------

size_t Reducer::KeyHash::operator()(const Key& k) const {
    size_t h = k.size();
    for (int x : k) h ^= std::hash<int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Reducer::Reducer(std::shared_ptr<const Space> space, ReducerBudget budget, bool parallel)
    : space_(std::move(space)), budget_(budget), parallel_(parallel) {}

namespace {

constexpr int kRelationDegree = 1 << 20;

void label_range(const Key& k, int* lo, int* hi) {
    size_t p = 3 + key_isolated(k) + 2 * key_legs(k);
    int E = k.at(p++);
    for (int i = 0; i < E; ++i, p += 3) {
        *lo = std::min(*lo, k[p + 2]);
        *hi = std::max(*hi, k[p + 2]);
    }
}

}  // namespace

std::vector<Series> Reducer::relations_of(const Space& space, const Key& k, int N) {
    std::vector<Series> rels;
    Diagram d = decode(k);
    for (int u = 0; u < d.num_nodes(); ++u) {
        if (d.nodes[u].leg || !space.has_hol() || space.gauge()) continue;
        for (int dir : {1, -1}) {
            Diagram y = d;
            for (int h : y.nodes[u].he) y.label[h / 2] += (h & 1) ? -dir : dir;
            Series r = space.series(N);
            space.add_normalized(y, 1, r);
            space.add_normalized(d, -1, r);
            if (!r.is_zero()) rels.push_back(std::move(r));
        }
    }
    for (int e = 0; e < d.num_edges(); ++e) {
        int u = d.tail(e), v = d.head(e);
        if (u == v || d.nodes[u].leg || d.nodes[v].leg) continue;
        Diagram base = d;
        if (space.has_hol()) {
            // push the middle label through v so that the IHX site reads t^0
            int k0 = d.label[e];
            for (int h : d.nodes[v].he)
                if (h != 2 * e + 1 && d.owner[h ^ 1] != v) base.label[h / 2] += (h & 1) ? -k0 : k0;
        }
        const auto& hu_list = d.nodes[u].he;
        const auto& hv_list = d.nodes[v].he;
        int su = static_cast<int>(std::find(hu_list.begin(), hu_list.end(), 2 * e) - hu_list.begin());
        int sv = static_cast<int>(std::find(hv_list.begin(), hv_list.end(), 2 * e + 1) - hv_list.begin());
        int x = hu_list[(su + 1) % 3], y = hu_list[(su + 2) % 3];
        int z = hv_list[(sv + 1) % 3], w = hv_list[(sv + 2) % 3];
        const int shapes[3][4] = {{x, y, z, w}, {y, z, x, w}, {z, x, y, w}};
        Series r = space.series(N);
        for (const auto& [j, q] : space.unit()) {
            for (const auto& s : shapes) {
                Diagram t = base;
                t.label[e] = j;
                t.nodes[u].he = {s[0], s[1], 2 * e};
                t.nodes[v].he = {2 * e + 1, s[2], s[3]};
                t.owner[s[0]] = t.owner[s[1]] = u;
                t.owner[s[2]] = t.owner[s[3]] = v;
                space.add_normalized(t, q, r);
            }
        }
        if (!r.is_zero()) rels.push_back(std::move(r));
    }
    return rels;
}

Series Reducer::eliminate(Series s) const {
    bool first = true;
    Key bound;
    while (true) {
        const auto& t = s.terms();
        auto it = first ? t.end() : t.lower_bound(bound);
        bool found = false;
        while (it != t.begin()) {
            --it;
            if (rows_.count(it->first)) {
                found = true;
                break;
            }
        }
        if (!found) break;
        Key p = it->first;
        Rational c = it->second;
        s -= rows_.at(p).scaled(c);
        bound = p;
        first = false;
    }
    return s;
}

void Reducer::insert_row(Series row) {
    row = eliminate(std::move(row));
    if (row.is_zero()) return;
    Key p = row.terms().rbegin()->first;
    Rational c = row.terms().rbegin()->second;
    rows_.emplace(p, row.scaled(Rational(1) / c));
}

bool Reducer::explore(const Series& s, bool extend_window) {
    auto in_window = [&](const Key& k) {
        int a = hi_, b = lo_;
        label_range(k, &a, &b);
        return a >= lo_ && b <= hi_;
    };
    auto admit = [&](const Key& k) {
        return static_cast<long>(seen_.size()) < budget_.diagrams && in_window(k) && seen_.insert(k).second;
    };
    std::vector<Key> layer;
    for (const auto& [k, c] : s.terms()) {
        if (!extend_window) {
            if (admit(k)) layer.push_back(k);
            continue;
        }
        if (!window_set_) {
            lo_ = hi_ = 0;
            window_set_ = true;
        }
        int a = lo_ + budget_.window, b = hi_ - budget_.window;
        label_range(k, &a, &b);
        lo_ = a - budget_.window;
        hi_ = b + budget_.window;
        if (seen_.insert(k).second) layer.push_back(k);
    }
    bool grew = !layer.empty();
    while (!layer.empty()) {
        std::vector<std::vector<Series>> rels(layer.size());
        const Space& space = *space_;
        if (parallel_) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(layer.size()); ++i)
                rels[i] = relations_of(space, layer[i], kRelationDegree);
        } else {
            for (size_t i = 0; i < layer.size(); ++i) rels[i] = relations_of(space, layer[i], kRelationDegree);
        }
        std::vector<Key> next;
        for (auto& group : rels)
            for (auto& r : group) {
                for (const auto& [k, c] : r.terms())
                    if (admit(k)) next.push_back(k);
                insert_row(std::move(r));
            }
        layer = std::move(next);
    }
    return grew;
}

Series Reducer::reduce(const Series& s) {
    explore(s, true);
    Series r = eliminate(s);
    while (explore(r, false)) r = eliminate(r);
    return r;
}

std::string Reducer::equal_mod_relations(const Series& a, const Series& b) {
    return reduce(a - b).is_zero() ? "equal" : "unresolved";
}

}  // namespace kricker
