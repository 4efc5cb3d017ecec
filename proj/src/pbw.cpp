#include "kricker/pbw.hpp"

#include <algorithm>
#include <numeric>

namespace kricker {

namespace {

constexpr int kUnbounded = 1 << 20;

Series beaded_series(int N) { return Series(N, Grading::VertexDegree, 0, true); }
Series interval_series(int N) { return Series(N, Grading::VertexDegree, 0, false); }

// Adds an edge without touching cyclic orders.
int raw_edge(Diagram& d, int from, int to, int k) {
    int e = d.num_edges();
    d.label.push_back(k);
    d.owner.push_back(from);
    d.owner.push_back(to);
    return e;
}

std::map<int, std::vector<int>> legs_by_colour(const Diagram& d) {
    std::map<int, std::vector<int>> out;
    for (int v = 0; v < d.num_nodes(); ++v)
        if (d.nodes[v].leg) out[d.nodes[v].a].push_back(v);
    for (auto& [c, l] : out)
        std::sort(l.begin(), l.end(), [&](int x, int y) { return d.nodes[x].b < d.nodes[y].b; });
    return out;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Mixed-radix enumeration of one permutation per colour.
struct Orderings {
    std::vector<std::vector<std::vector<int>>> perms;  // per colour, all permutations of 0..k-1
    long total = 1;
    explicit Orderings(const std::vector<int>& sizes) {
        for (int k : sizes) {
            std::vector<int> p(k);
            std::iota(p.begin(), p.end(), 0);
            std::vector<std::vector<int>> all;
            do all.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
            total *= static_cast<long>(all.size());
            perms.push_back(std::move(all));
        }
    }
    std::vector<const std::vector<int>*> at(long idx) const {
        std::vector<const std::vector<int>*> r;
        for (const auto& all : perms) {
            r.push_back(&all[idx % static_cast<long>(all.size())]);
            idx /= static_cast<long>(all.size());
        }
        return r;
    }
};

template <class F>
Series parallel_sum(long total, const Series& like, bool parallel, F body) {
    Series result = like.empty_like();
    if (!parallel) {
        for (long i = 0; i < total; ++i) body(i, result);
        return result;
    }
#pragma omp parallel
    {
        Series local = like.empty_like();
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < total; ++i) body(i, local);
#pragma omp critical
        result += local;
    }
    return result;
}

}  // namespace

Diagram forget_positions(const Diagram& interval) {
    Diagram d = interval;
    for (auto& n : d.nodes)
        if (n.leg) n.b = 0;
    return d;
}

void compact_positions(Diagram& x) {
    for (auto& [c, legs] : legs_by_colour(x))
        for (size_t p = 0; p < legs.size(); ++p) x.nodes[legs[p]].b = static_cast<int>(p);
}

Series chi(const Series& beaded, bool parallel) {
    Series out = interval_series(beaded.truncation());
    for (const auto& [k, c] : beaded.terms()) {
        Diagram d = decode(k);
        auto groups = legs_by_colour(d);
        std::vector<int> sizes;
        std::vector<std::vector<int>> legs;
        for (auto& [col, l] : groups) {
            sizes.push_back(static_cast<int>(l.size()));
            legs.push_back(l);
        }
        Orderings ord(sizes);
        Rational w = c / Rational(ord.total);
        out += parallel_sum(ord.total, out, parallel, [&](long idx, Series& acc) {
            Diagram x = d;
            auto perms = ord.at(idx);
            for (size_t g = 0; g < legs.size(); ++g)
                for (size_t p = 0; p < legs[g].size(); ++p) x.nodes[legs[g][(*perms[g])[p]]].b = static_cast<int>(p);
            acc.add(x, w);
        });
    }
    return out;
}

void stu_path(const Diagram& x0, const std::vector<std::vector<int>>& target, const Rational& c, Series& out) {
    Diagram x = x0;
    auto groups = legs_by_colour(x);
    for (const auto& want : target) {
        if (want.empty()) continue;
        int comp = x.nodes[want[0]].a;
        std::vector<int> cur = groups[comp];
        if (cur.size() != want.size()) throw std::logic_error("stu path: leg sets differ");
        for (size_t i = 0; i < want.size(); ++i) {
            size_t j = std::find(cur.begin() + i, cur.end(), want[i]) - cur.begin();
            if (j == cur.size()) throw std::logic_error("stu path: leg sets differ");
            for (size_t k = j; k > i; --k) {
                int a = cur[k - 1], b = cur[k];
                for (size_t p = 0; p < cur.size(); ++p) x.nodes[cur[p]].b = static_cast<int>(p);
                // x(.. a b ..) = x(.. b a ..) + S, S merging a and b at a new vertex (a-edge, b-edge, stem)
                Diagram s = x;
                int ha = s.nodes[a].he[0], hb = s.nodes[b].he[0];
                int w = s.add_tri();
                int l = s.add_leg(comp, static_cast<int>(k) - 1);
                int e = raw_edge(s, w, l, 0);
                s.nodes[l].he = {2 * e + 1};
                s.nodes[w].he = {ha, hb, 2 * e};
                s.owner[ha] = s.owner[hb] = w;
                for (size_t p = k + 1; p < cur.size(); ++p) s.nodes[cur[p]].b -= 1;
                std::vector<bool> dn(s.num_nodes(), false), de(s.num_edges(), false);
                dn[a] = dn[b] = true;
                s.erase(dn, de);
                out.add(s, c);
                std::swap(cur[k - 1], cur[k]);
            }
        }
        for (size_t p = 0; p < cur.size(); ++p) x.nodes[cur[p]].b = static_cast<int>(p);
        groups[comp] = cur;
    }
}

Series ChiInverse::operator()(const Series& interval) {
    Series out = beaded_series(interval.truncation());
    for (const auto& [k, c] : interval.terms()) {
        if (only_.empty()) {
            for (const auto& [k2, c2] : of_key(k).terms()) out.add_key(k2, c * c2);
            continue;
        }
        Diagram d = decode(k);
        for (auto& n : d.nodes)
            if (n.leg && !only_.count(n.a)) n.b = 0;
        Canonical cd = canonical_form(d, 0, false);
        if (cd.sign == 0) continue;
        for (const auto& [k2, c2] : of_key(cd.key).terms()) out.add_key(k2, cd.sign * c * c2);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> canonical_leg_order(const Diagram& x, const std::set<int>& only) {
    Canonical cs = canonical_form(forget_positions(x), 0, false);
    std::map<int, std::vector<int>> by;
    for (int v : cs.order)
        if (x.nodes[v].leg && (only.empty() || only.count(x.nodes[v].a))) by[x.nodes[v].a].push_back(v);
    std::vector<std::vector<int>> target;
    for (auto& [c, l] : by) target.push_back(l);
    return target;
}

Diagram reorder(const Diagram& x, const std::vector<std::vector<int>>& target) {
    Diagram y = x;
    for (const auto& l : target)
        for (size_t p = 0; p < l.size(); ++p) y.nodes[l[p]].b = static_cast<int>(p);
    return y;
}

}  // namespace

const Series& ChiInverse::of_key(const Key& key) {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Diagram x = decode(key);
    auto target = canonical_leg_order(x, only_);
    Diagram xr = reorder(x, target);
    Canonical kr = canonical_form(xr, 0, false);
    Series result = beaded_series(kUnbounded);
    if (kr.sign != 0) {
        if (kr.key == key) {
            result += direct(xr).scaled(kr.sign);
        } else {
            Series p = interval_series(kUnbounded);
            stu_path(x, target, 1, p);
            Series base = of_key(kr.key).scaled(kr.sign);
            result += base;
            result += (*this)(p);
        }
    } else {
        Series p = interval_series(kUnbounded);
        stu_path(x, target, 1, p);
        result += (*this)(p);
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

Series ChiInverse::direct(const Diagram& xr) {
    auto target = canonical_leg_order(xr, only_);
    std::vector<int> sizes;
    for (const auto& l : target) sizes.push_back(static_cast<int>(l.size()));
    Orderings ord(sizes);
    Series like = interval_series(kUnbounded);
    Series paths = parallel_sum(ord.total, like, parallel_, [&](long idx, Series& acc) {
        auto perms = ord.at(idx);
        Diagram xs = xr;
        for (size_t g = 0; g < target.size(); ++g)
            for (size_t p = 0; p < target[g].size(); ++p) xs.nodes[target[g][(*perms[g])[p]]].b = static_cast<int>(p);
        stu_path(xs, target, 1, acc);
    });
    Series result = beaded_series(kUnbounded);
    result.add(forget_positions(xr), 1);
    result -= (*this)(paths.scaled(Rational(1) / Rational(ord.total)));
    return result;
}

// ---------------------------------------------------------------------------

void contract_bracket(const Diagram& d, int c, int cbar, const Rational& coeff, Series& out) {
    std::vector<int> us, vs;
    for (int v = 0; v < d.num_nodes(); ++v) {
        if (!d.nodes[v].leg) continue;
        if (d.nodes[v].a == c) us.push_back(v);
        else if (d.nodes[v].a == cbar) vs.push_back(v);
    }
    if (us.size() != vs.size()) return;
    std::vector<int> perm(vs.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Diagram y = d;
        std::vector<bool> dn(y.num_nodes(), false), de(y.num_edges(), false);
        for (size_t i = 0; i < us.size(); ++i) {
            int u = us[i], w = vs[perm[i]];
            int k1 = y.out_label(y.nodes[u].he[0] ^ 1, 0);
            int k2 = y.out_label(y.nodes[w].he[0], 0);
            join_legs_inplace(y, u, w, k1 + k2, dn, de);
        }
        y.erase(dn, de);
        out.add(y, coeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Series contract_bracket(const Series& s, int c, int cbar) {
    Series out = s.empty_like();
    for (const auto& [k, x] : s.terms()) contract_bracket(decode(k), c, cbar, x, out);
    return out;
}

namespace {

void insert_chain(Diagram& y, int v, int s, int h) {
    if (s == 0) return;
    int hv = y.nodes[v].he[0];
    std::vector<int> w(s), chain(s), hedge(s);
    for (int i = 0; i < s; ++i) w[i] = y.add_tri();
    for (int i = 0; i < s; ++i) {
        int to = i + 1 < s ? w[i + 1] : v;
        chain[i] = raw_edge(y, w[i], to, 0);
        int l = y.add_leg(h);
        hedge[i] = raw_edge(y, w[i], l, 0);
        y.nodes[l].he = {2 * hedge[i] + 1};
    }
    y.owner[hv] = w[0];
    for (int i = 0; i < s; ++i) {
        int aside = i == 0 ? hv : 2 * chain[i - 1] + 1;
        y.nodes[w[i]].he = {2 * chain[i], aside, 2 * hedge[i]};
    }
    y.nodes[v].he = {2 * chain[s - 1] + 1};
}

int degree_of(const Diagram& d, Grading g) {
    return g == Grading::IDegree ? d.i_degree() : (d.num_tri() + d.num_legs()) / 2;
}

}  // namespace

void push_exponential(const Diagram& d, int c, int h, int sign, const Rational& coeff, Series& out) {
    std::vector<int> legs;
    for (int v = 0; v < d.num_nodes(); ++v)
        if (d.nodes[v].leg && d.nodes[v].a == c) legs.push_back(v);
    int room = out.truncation() - degree_of(d, out.grading());
    if (room < 0) return;
    std::vector<int> s(legs.size(), 0);
    auto emit = [&]() {
        int total = 0;
        Rational w = coeff;
        Diagram y = d;
        for (size_t i = 0; i < legs.size(); ++i) {
            total += s[i];
            w /= factorial(s[i]);
            insert_chain(y, legs[i], s[i], h);
        }
        if (sign < 0 && total % 2) w = -w;
        out.add(y, w);
    };
    auto rec = [&](auto&& self, size_t i, int left) -> void {
        if (i == legs.size()) {
            emit();
            return;
        }
        for (int k = 0; k <= left; ++k) {
            s[i] = k;
            self(self, i + 1, left - k);
        }
        s[i] = 0;
    };
    rec(rec, 0, room);
}

Series push_exponential(const Series& s, int c, int h, int sign) {
    Series out = s.empty_like();
    for (const auto& [k, x] : s.terms()) push_exponential(decode(k), c, h, sign, x, out);
    return out;
}

Diagram push_monomial(const Diagram& d, int c, int k) {
    Diagram y = d;
    for (int v = 0; v < y.num_nodes(); ++v) {
        if (!y.nodes[v].leg || y.nodes[v].a != c) continue;
        int h = y.nodes[v].he[0];
        y.label[h / 2] += (h & 1) ? -k : k;
    }
    return y;
}

Series push_monomial(const Series& s, int c, int k) {
    Series out = s.empty_like();
    for (const auto& [key, x] : s.terms()) out.add(push_monomial(decode(key), c, k), x);
    return out;
}

Series bch_lambda(int n, int kbar, int hbar, int N) {
    if (N > 3) throw std::domain_error("BCH element beyond degree 3");
    Series out = beaded_series(N);
    for (int col : {kbar, hbar}) {
        Diagram s;
        int a = s.add_leg(n), b = s.add_leg(col);
        s.add_edge(a, b, 0);
        out.add(s, 1);
    }
    if (N >= 2) {
        Diagram y;
        int w = y.add_tri();
        int lk = y.add_leg(kbar), lh = y.add_leg(hbar), ln = y.add_leg(n);
        y.add_edge(w, lk, 0);
        y.add_edge(w, lh, 0);
        y.add_edge(w, ln, 0);
        out.add(y, Rational(1, 2));
    }
    if (N >= 3) {
        for (auto [col, c] : {std::pair<int, Rational>{kbar, Rational(1, 12)}, {hbar, Rational(-1, 12)}}) {
            // [col, [kbar, hbar]] with stem n
            Diagram y;
            int outer = y.add_tri(), inner = y.add_tri();
            int lx = y.add_leg(col), lk = y.add_leg(kbar), lh = y.add_leg(hbar), ln = y.add_leg(n);
            y.add_edge(outer, lx, 0);
            int mid = raw_edge(y, inner, outer, 0);
            y.nodes[outer].he.push_back(2 * mid + 1);
            y.add_edge(outer, ln, 0);
            y.add_edge(inner, lk, 0);
            y.add_edge(inner, lh, 0);
            y.nodes[inner].he.push_back(2 * mid);
            out.add(y, c);
        }
    }
    return out;
}

Series duplicate_component(const Series& interval, int i, int inew) {
    Series out = interval.empty_like();
    for (const auto& [k, c] : interval.terms()) {
        Diagram d = decode(k);
        std::vector<int> legs = legs_by_colour(d)[i];
        int n = static_cast<int>(legs.size());
        for (long mask = 0; mask < (1L << n); ++mask) {
            Diagram y = d;
            for (int p = 0; p < n; ++p)
                if (mask >> p & 1) y.nodes[legs[p]].a = inew;
            compact_positions(y);
            out.add(y, c);
        }
    }
    return out;
}

Series merge_components(const Series& interval, int j, int i2, int jnew) {
    Series out = interval.empty_like();
    for (const auto& [k, c] : interval.terms()) {
        Diagram d = decode(k);
        auto groups = legs_by_colour(d);
        int below = static_cast<int>(groups[j].size());
        for (int v : groups[j]) d.nodes[v].a = jnew;
        for (int v : groups[i2]) {
            d.nodes[v].a = jnew;
            d.nodes[v].b += below;
        }
        compact_positions(d);
        out.add(d, c);
    }
    return out;
}

}  // namespace kricker
