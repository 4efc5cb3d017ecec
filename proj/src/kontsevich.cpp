#include "kricker/kontsevich.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace kricker {

namespace {

bool is_top(int end) { return end != kNoEnd && end < 0; }
int top(int j) { return ~j; }

int degree_of(const ArcTokens& t) {
    int n = 0;
    for (const auto& a : t)
        for (int x : a)
            if (x >= 0) ++n;
    return n / 2;
}

int end_rank(int e) { return e >= 0 ? e : (1 << 20) + ~e; }

// Open arcs first, by their lowest end (bottom ends before top ends); circles after.
bool open_before(const Arc& a, const Arc& b) {
    bool ca = a.tail == kNoEnd, cb = b.tail == kNoEnd;
    if (ca != cb) return cb;
    if (ca) return false;
    return std::min(end_rank(a.tail), end_rank(a.head)) < std::min(end_rank(b.tail), end_rank(b.head));
}

// Stable order: open arcs by endpoints, circles keep their relative order.
std::vector<int> arc_order(const std::vector<Arc>& arcs) {
    std::vector<int> order(arcs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return open_before(arcs[x], arcs[y]); });
    return order;
}

std::vector<Arc> identity_arcs(const std::vector<bool>& word) {
    std::vector<Arc> arcs;
    for (int j = 0; j < static_cast<int>(word.size()); ++j)
        arcs.push_back(word[j] ? Arc{j, top(j)} : Arc{top(j), j});
    return arcs;
}

std::vector<bool> strand_word(const ComponentMap& c, int level) {
    std::vector<bool> w;
    for (int l : c.leg_at[level]) w.push_back(c.legs[l].up);
    return w;
}

std::vector<int> concat_renumbered(const std::vector<int>& a, const std::vector<int>& b, int offset) {
    std::vector<int> r = a;
    for (int x : b) r.push_back(x >= 0 ? x + offset : x);
    return r;
}

int chords_in(const std::vector<int>& s) {
    int n = 0;
    for (int x : s)
        if (x >= 0) ++n;
    return n / 2;
}

void renumber_strand(std::vector<int>& s) {
    std::map<int, int> ids;
    for (int& x : s) {
        if (x < 0) continue;
        auto [it, ins] = ids.try_emplace(x, static_cast<int>(ids.size()));
        x = it->second;
    }
}

StrandSeries strand_product(const StrandSeries& a, const StrandSeries& b, int D) {
    StrandSeries r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            if (chords_in(wa) + chords_in(wb) > D) continue;
            std::vector<int> w = concat_renumbered(wa, wb, chords_in(wa));
            renumber_strand(w);
            Rational& slot = r[w];
            slot += ca * cb;
            if (slot == 0) r.erase(w);
        }
    return r;
}

StrandSeries strand_inverse(const StrandSeries& x, int D) {
    auto it = x.find({});
    if (it == x.end() || it->second != 1) throw std::domain_error("inverse needs constant term 1");
    StrandSeries y = x;
    y.erase(std::vector<int>{});
    for (auto& [w, c] : y) c = -c;
    StrandSeries result{{{}, 1}}, power{{{}, 1}};
    for (int k = 1; k <= D; ++k) {
        power = strand_product(power, y, D);
        for (const auto& [w, c] : power) {
            Rational& slot = result[w];
            slot += c;
            if (slot == 0) result.erase(w);
        }
    }
    return result;
}

}  // namespace

MorphismSeries::MorphismSeries(std::vector<bool> source, std::vector<bool> target, std::vector<Arc> arcs, int D)
    : source_(std::move(source)), target_(std::move(target)), arcs_(std::move(arcs)), D_(D) {
    std::vector<int> order = arc_order(arcs_);
    for (size_t k = 0; k < order.size(); ++k)
        if (order[k] != static_cast<int>(k)) throw std::invalid_argument("arcs must be listed in canonical order");
}

MorphismSeries MorphismSeries::identity(const std::vector<bool>& word, int D) {
    MorphismSeries m(word, word, identity_arcs(word), D);
    m.add(ArcTokens(word.size()), 1);
    return m;
}

void MorphismSeries::add(ArcTokens t, const Rational& c) {
    if (c == 0 || degree_of(t) > D_) return;
    if (t.size() != arcs_.size()) throw std::invalid_argument("token lists do not match the arcs");
    std::map<int, int> ids;
    for (auto& a : t)
        for (int& x : a) {
            if (x < 0) continue;
            auto [it, ins] = ids.try_emplace(x, static_cast<int>(ids.size()));
            x = it->second;
        }
    auto [it, inserted] = terms_.try_emplace(std::move(t), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MorphismSeries operator+(const MorphismSeries& a, const MorphismSeries& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_ || a.arcs_ != b.arcs_)
        throw std::invalid_argument("sum of morphisms on different skeletons");
    MorphismSeries r = a;
    for (const auto& [t, c] : b.terms_) r.add(t, c);
    return r;
}

MorphismSeries MorphismSeries::scaled(const Rational& c) const {
    MorphismSeries r(source_, target_, arcs_, D_);
    for (const auto& [t, x] : terms_) r.add(t, x * c);
    return r;
}

MorphismSeries compose(const MorphismSeries& f, const MorphismSeries& g) {
    if (f.source() != g.target()) throw std::invalid_argument("compose: word mismatch");
    const auto& ga = g.arcs();
    const auto& fa = f.arcs();
    int ng = static_cast<int>(ga.size()), np = ng + static_cast<int>(fa.size());
    int mid = static_cast<int>(g.target().size());
    // Piece ends: external ends keep their encoding, middle point j is marked separately.
    struct End {
        bool middle = false;
        int value = kNoEnd;
    };
    std::vector<End> tail(np), head(np);
    std::vector<int> starts_at(mid, -1);
    auto g_end = [&](int e) { return is_top(e) ? End{true, ~e} : End{false, e}; };
    auto f_end = [&](int e) { return (e != kNoEnd && e >= 0) ? End{true, e} : End{false, e}; };
    for (int p = 0; p < np; ++p) {
        const Arc& a = p < ng ? ga[p] : fa[p - ng];
        tail[p] = p < ng ? g_end(a.tail) : f_end(a.tail);
        head[p] = p < ng ? g_end(a.head) : f_end(a.head);
        if (tail[p].middle) starts_at[tail[p].value] = p;
    }
    std::vector<std::vector<int>> chains;
    std::vector<Arc> arcs;
    std::vector<bool> used(np, false);
    auto follow = [&](int p, bool closed) {
        std::vector<int> chain;
        int cur = p;
        while (true) {
            chain.push_back(cur);
            used[cur] = true;
            if (!head[cur].middle) break;
            cur = starts_at[head[cur].value];
            if (cur < 0) throw std::logic_error("compose: orientation mismatch");
            if (closed && cur == p) break;
        }
        Arc a;
        if (!closed) {
            a.tail = tail[p].value;
            a.head = head[chain.back()].value;
        }
        chains.push_back(chain);
        arcs.push_back(a);
    };
    for (int p = 0; p < np; ++p)
        if (!tail[p].middle && tail[p].value != kNoEnd) follow(p, false);
    for (int p = 0; p < np; ++p)
        if (!used[p]) follow(p, true);
    std::vector<int> order = arc_order(arcs);
    std::vector<Arc> sorted;
    std::vector<std::vector<int>> sorted_chains;
    for (int k : order) {
        sorted.push_back(arcs[k]);
        sorted_chains.push_back(chains[k]);
    }
    MorphismSeries r(g.source(), f.target(), sorted, std::min(f.truncation(), g.truncation()));
    std::vector<std::pair<const ArcTokens*, Rational>> gs, fs;
    for (const auto& [t, c] : g.terms()) gs.emplace_back(&t, c);
    for (const auto& [t, c] : f.terms()) fs.emplace_back(&t, c);
    for (const auto& [tg, cg] : gs) {
        int dg = degree_of(*tg);
        int offset = 2 * dg + 1;
        for (const auto& [tf, cf] : fs) {
            if (dg + degree_of(*tf) > r.truncation()) continue;
            ArcTokens t(sorted.size());
            for (size_t a = 0; a < sorted.size(); ++a)
                for (int p : sorted_chains[a]) {
                    if (p < ng) t[a].insert(t[a].end(), (*tg)[p].begin(), (*tg)[p].end());
                    else
                        for (int x : (*tf)[p - ng]) t[a].push_back(x >= 0 ? x + offset : x);
                }
            r.add(std::move(t), cg * cf);
        }
    }
    return r;
}

MorphismSeries tensor(const MorphismSeries& f, const MorphismSeries& g) {
    int s = static_cast<int>(f.source().size()), t = static_cast<int>(f.target().size());
    auto shift = [&](int e) {
        if (e == kNoEnd) return e;
        return is_top(e) ? ~(~e + t) : e + s;
    };
    std::vector<Arc> arcs = f.arcs();
    for (const Arc& a : g.arcs()) arcs.push_back({shift(a.tail), shift(a.head)});
    std::vector<int> order = arc_order(arcs);
    std::vector<Arc> sorted;
    for (int k : order) sorted.push_back(arcs[k]);
    std::vector<bool> src = f.source(), tgt = f.target();
    src.insert(src.end(), g.source().begin(), g.source().end());
    tgt.insert(tgt.end(), g.target().begin(), g.target().end());
    MorphismSeries r(src, tgt, sorted, std::min(f.truncation(), g.truncation()));
    for (const auto& [tf, cf] : f.terms()) {
        int offset = 2 * degree_of(tf) + 1;
        for (const auto& [tg, cg] : g.terms()) {
            ArcTokens all = tf;
            for (const auto& a : tg) {
                std::vector<int> x;
                for (int v : a) x.push_back(v >= 0 ? v + offset : v);
                all.push_back(x);
            }
            ArcTokens out(sorted.size());
            for (size_t k = 0; k < order.size(); ++k) out[k] = all[order[k]];
            r.add(std::move(out), cf * cg);
        }
    }
    return r;
}

MorphismSeries chords_on_identity(const std::vector<bool>& word, const std::vector<std::pair<ChordWord, Rational>>& sum,
                                  int D) {
    MorphismSeries m(word, word, identity_arcs(word), D);
    int n = static_cast<int>(word.size());
    for (const auto& [chords, c] : sum) {
        if (static_cast<int>(chords.size()) > D) continue;
        ArcTokens t(n);
        for (size_t k = 0; k < chords.size(); ++k) {
            t[chords[k].first].push_back(static_cast<int>(k));
            t[chords[k].second].push_back(static_cast<int>(k));
        }
        for (int j = 0; j < n; ++j)
            if (!word[j]) std::reverse(t[j].begin(), t[j].end());
        m.add(std::move(t), c);
    }
    return m;
}

MorphismSeries marker_value(const std::vector<bool>& word, int strand, int token, int D) {
    MorphismSeries m(word, word, identity_arcs(word), D);
    ArcTokens t(word.size());
    t[strand].push_back(token);
    m.add(std::move(t), 1);
    return m;
}

MorphismSeries crossing_value(const std::vector<bool>& word, int p, int sign, int D) {
    int n = static_cast<int>(word.size());
    if (p < 0 || p + 1 >= n) throw std::invalid_argument("crossing outside the word");
    std::vector<bool> tgt = word;
    std::swap(tgt[p], tgt[p + 1]);
    std::vector<Arc> arcs;
    for (int j = 0; j < n; ++j) {
        int to = j == p ? p + 1 : j == p + 1 ? p : j;
        arcs.push_back(word[j] ? Arc{j, top(to)} : Arc{top(to), j});
    }
    std::vector<int> order = arc_order(arcs);
    std::vector<Arc> sorted;
    std::vector<int> slot(n);
    for (size_t k = 0; k < order.size(); ++k) {
        sorted.push_back(arcs[order[k]]);
        slot[order[k]] = static_cast<int>(k);
    }
    MorphismSeries m(word, tgt, sorted, D);
    Rational c = 1;
    for (int k = 0; k <= D; ++k) {
        ArcTokens t(n);
        for (int j = 0; j < k; ++j) {
            t[slot[p]].push_back(j);
            t[slot[p + 1]].push_back(j);
        }
        if (!word[p]) std::reverse(t[slot[p]].begin(), t[slot[p]].end());
        if (!word[p + 1]) std::reverse(t[slot[p + 1]].begin(), t[slot[p + 1]].end());
        m.add(std::move(t), c);
        c *= Rational(sign, 2 * (k + 1));
    }
    return m;
}

MorphismSeries cup_value(const std::vector<bool>& word, int p, bool left_down, int D) {
    int n = static_cast<int>(word.size());
    if (p < 0 || p > n) throw std::invalid_argument("cup outside the word");
    std::vector<bool> tgt = word;
    tgt.insert(tgt.begin() + p, {!left_down, left_down});
    std::vector<Arc> arcs;
    for (int j = 0; j < n; ++j) {
        int to = j < p ? j : j + 2;
        arcs.push_back(word[j] ? Arc{j, top(to)} : Arc{top(to), j});
    }
    arcs.push_back(left_down ? Arc{top(p), top(p + 1)} : Arc{top(p + 1), top(p)});
    std::vector<int> order = arc_order(arcs);
    std::vector<Arc> sorted;
    for (int k : order) sorted.push_back(arcs[k]);
    MorphismSeries m(word, tgt, sorted, D);
    m.add(ArcTokens(sorted.size()), 1);
    return m;
}

MorphismSeries cap_value(const std::vector<bool>& word, int p, const StrandSeries& nu, int D) {
    int n = static_cast<int>(word.size());
    if (p < 0 || p + 1 >= n) throw std::invalid_argument("cap outside the word");
    if (word[p] == word[p + 1]) throw std::invalid_argument("cap joins strands of the same orientation");
    std::vector<bool> tgt = word;
    tgt.erase(tgt.begin() + p, tgt.begin() + p + 2);
    std::vector<Arc> arcs;
    for (int j = 0; j < n; ++j) {
        if (j == p || j == p + 1) continue;
        int to = j < p ? j : j - 2;
        arcs.push_back(word[j] ? Arc{j, top(to)} : Arc{top(to), j});
    }
    arcs.push_back(word[p] ? Arc{p, p + 1} : Arc{p + 1, p});
    std::vector<int> order = arc_order(arcs);
    std::vector<Arc> sorted;
    int cap_slot = -1;
    for (size_t k = 0; k < order.size(); ++k) {
        sorted.push_back(arcs[order[k]]);
        if (order[k] == static_cast<int>(arcs.size()) - 1) cap_slot = static_cast<int>(k);
    }
    MorphismSeries m(word, tgt, sorted, D);
    for (const auto& [w, c] : nu) {
        ArcTokens t(sorted.size());
        t[cap_slot] = w;
        m.add(std::move(t), c);
    }
    return m;
}

MorphismSeries associator_value(const std::vector<bool>& word, int x0, int nx, int ny, int nz, const HPoly& phi, int D) {
    std::vector<std::vector<std::pair<int, int>>> block(3);
    std::vector<std::vector<int>> members(3);
    for (int k = 0; k < nx; ++k) members[0].push_back(x0 + k);
    for (int k = 0; k < ny; ++k) members[1].push_back(x0 + nx + k);
    for (int k = 0; k < nz; ++k) members[2].push_back(x0 + nx + ny + k);
    // letter -> list of (strand, strand) with its orientation sign
    std::vector<std::vector<std::pair<std::pair<int, int>, int>>> expand(3);
    for (int letter = 0; letter < 3; ++letter) {
        auto [i, j] = letter_chord(3, letter);
        for (int a : members[i])
            for (int b : members[j]) {
                int s = (word[a] ? 1 : -1) * (word[b] ? 1 : -1);
                expand[letter].push_back({{a, b}, s});
            }
    }
    std::vector<std::pair<ChordWord, Rational>> sum;
    for (const auto& [w, c] : phi.terms) {
        if (static_cast<int>(w.size()) > D) continue;
        ChordWord cur;
        std::function<void(int, Rational)> rec = [&](int k, Rational coeff) {
            if (k < 0) {
                sum.emplace_back(cur, coeff);
                return;
            }
            for (const auto& [pair, s] : expand[w[k]]) {
                cur.push_back(pair);
                rec(k - 1, coeff * s);
                cur.pop_back();
            }
        };
        // bottom letter is the last one in the word
        rec(static_cast<int>(w.size()) - 1, c);
    }
    return chords_on_identity(word, sum, D);
}

StrandSeries compute_nu(const Associator& phi, int D, bool right_snake) {
    std::vector<bool> up{true};
    MorphismSeries m = MorphismSeries::identity(up, D);
    StrandSeries one{{{}, 1}};
    if (right_snake) {
        m = compose(cup_value(up, 1, true, D), m);
        m = compose(associator_value(m.target(), 0, 1, 1, 1, phi.phi_inverse, D), m);
        m = compose(cap_value(m.target(), 0, one, D), m);
    } else {
        m = compose(cup_value(up, 0, false, D), m);
        m = compose(associator_value(m.target(), 0, 1, 1, 1, phi.phi, D), m);
        m = compose(cap_value(m.target(), 1, one, D), m);
    }
    StrandSeries contraction;
    for (const auto& [t, c] : m.terms()) contraction[t.at(0)] += c;
    return strand_inverse(contraction, D);
}

Series strand_series_to_interval(const StrandSeries& s, int D) {
    Series out(D, Grading::VertexDegree, 0, false);
    for (const auto& [w, c] : s) {
        Diagram d;
        std::map<int, int> first;
        for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
            int v = d.add_leg(0, pos);
            auto it = first.find(w[pos]);
            if (it == first.end()) first[w[pos]] = v;
            else d.add_edge(it->second, v, 0);
        }
        out.add(d, c);
    }
    return out;
}

FunctorData functor_data(int D) {
    if (D > 3) throw std::domain_error("associator beyond degree 3");
    FunctorData f;
    f.D = D;
    f.phi = compute_associator(D);
    f.nu = compute_nu(f.phi, D);
    return f;
}

MorphismSeries evaluate_program(const TangleProgram& p, const ComponentMap& c, const FunctorData& data) {
    const int D = data.D;
    const HPoly& phi = data.phi.phi;
    const HPoly& inv = data.phi.phi_inverse;
    MorphismSeries state = MorphismSeries::identity({}, D);
    auto apply = [&](const MorphismSeries& m) { state = compose(m, state); };
    auto position = [&](int level, int leg) {
        const auto& l = c.leg_at[level];
        return static_cast<int>(std::find(l.begin(), l.end(), leg) - l.begin());
    };
    auto base_markers = [&](int k, bool up_legs) {
        for (int i = 0; i < c.size(); ++i) {
            const BasePoint& b = c.components[i].base;
            if (b.after_slice != k || c.legs[b.leg].up != up_legs) continue;
            int level = up_legs ? k + 1 : k;
            apply(marker_value(state.target(), position(level, b.leg), base_marker(i), D));
        }
    };
    for (int k = 0; k < static_cast<int>(p.slices.size()); ++k) {
        const Slice& s = p.slices[k];
        std::vector<bool> word = strand_word(c, k);
        switch (s.kind) {
        case Slice::Cup: {
            apply(cup_value(word, s.pos, s.left_down, D));
            for (int i = 0; i < c.size(); ++i) {
                const BasePoint& b = c.components[i].base;
                if (b.after_slice >= 0 || c.legs[b.leg].cup_slice != k) continue;
                apply(marker_value(state.target(), position(k + 1, b.leg), base_marker(i), D));
            }
            if (s.pos >= 1) apply(associator_value(state.target(), 0, s.pos, 1, 1, inv, D));
            break;
        }
        case Slice::Cap:
            if (s.pos >= 1) apply(associator_value(word, 0, s.pos, 1, 1, phi, D));
            apply(cap_value(word, s.pos, data.nu, D));
            break;
        case Slice::CrossPos:
        case Slice::CrossNeg:
            if (s.pos >= 1) apply(associator_value(word, 0, s.pos, 1, 1, phi, D));
            base_markers(k, false);
            apply(crossing_value(word, s.pos, s.kind == Slice::CrossPos ? 1 : -1, D));
            base_markers(k, true);
            if (s.pos >= 1) apply(associator_value(state.target(), 0, s.pos, 1, 1, inv, D));
            break;
        case Slice::Disk:
            if (s.pos >= 1)
                for (int j = 1; j < s.width; ++j) apply(associator_value(word, 0, s.pos, j, 1, phi, D));
            base_markers(k, false);
            for (int q = s.pos; q < s.pos + s.width; ++q) apply(marker_value(word, q, word[q] ? kDiskUp : kDiskDown, D));
            base_markers(k, true);
            if (s.pos >= 1)
                for (int j = s.width - 1; j >= 1; --j) apply(associator_value(word, 0, s.pos, j, 1, inv, D));
            break;
        }
    }
    if (!state.target().empty()) throw std::logic_error("program does not close");
    return state;
}

Series cut_at_base_points(const MorphismSeries& closed, int components, int D, const StrandSeries* nu) {
    Series out(D, Grading::VertexDegree, 0, false);
    std::vector<std::pair<std::vector<int>, Rational>> nus{{{}, 1}};
    if (nu) nus.assign(nu->begin(), nu->end());
    for (const auto& [t, c] : closed.terms()) {
        // per component: token sequence from the base point
        std::vector<std::vector<int>> seq(components);
        for (const auto& arc : t) {
            auto it = std::find_if(arc.begin(), arc.end(), [](int x) { return x <= base_marker(0); });
            if (it == arc.end()) throw std::logic_error("circle without a base point");
            int comp = base_marker(0) - *it;
            std::vector<int> s(it + 1, arc.end());
            s.insert(s.end(), arc.begin(), it);
            seq.at(comp) = std::move(s);
        }
        int base_deg = degree_of(t);
        std::vector<int> choice(components, 0);
        std::function<void(int, int, Rational)> rec = [&](int comp, int deg, Rational coeff) {
            if (comp == components) {
                Diagram d;
                std::map<int, std::pair<int, int>> first;  // chord -> (node, s)
                for (int i = 0; i < components; ++i) {
                    const std::vector<int>& pre = nus[choice[i]].first;
                    int pos = 0, s = 0;
                    auto visit = [&](int x, int tag) {
                        if (x == kDiskUp) ++s;
                        else if (x == kDiskDown) --s;
                        if (x < 0) return;
                        int key = tag * 1000 + x;
                        int v = d.add_leg(i, pos++);
                        auto f = first.find(key);
                        if (f == first.end()) first[key] = {v, s};
                        else d.add_edge(f->second.first, v, f->second.second - s);
                    };
                    for (int x : pre) visit(x, 1 + i);
                    for (int x : seq[i]) visit(x, 0);
                }
                out.add(d, coeff);
                return;
            }
            for (size_t k = 0; k < nus.size(); ++k) {
                int dk = chords_in(nus[k].first);
                if (deg + dk > D) continue;
                choice[comp] = static_cast<int>(k);
                rec(comp + 1, deg + dk, coeff * nus[k].second);
            }
        };
        rec(0, base_deg, c);
    }
    return out;
}

Series z_bullet(const TangleProgram& p, const ComponentMap& c, const FunctorData& data) {
    return cut_at_base_points(evaluate_program(p, c, data), c.size(), data.D);
}

Series z_bullet(const TangleProgram& p, int N) {
    return z_bullet(p, trace_components(p), functor_data(N + 1));
}

Series z_circle(const TangleProgram& p, const ComponentMap& c, const FunctorData& data, bool parallel) {
    Series lifted = cut_at_base_points(evaluate_program(p, c, data), c.size(), data.D, &data.nu);
    ChiInverse inv(parallel);
    return inv(lifted);
}

Series z_circle(const TangleProgram& p, int N) { return z_circle(p, trace_components(p), functor_data(N + 1)); }

Gaussian split_gaussian(const Series& zc, int n, int N) {
    Series L = zc.log_disjoint();
    Series connected = L.connected_part();
    Series rest = L - connected;
    if (!rest.is_zero()) {
        Reducer r(beaded_space());
        if (!r.reduces_to_zero(rest)) throw std::logic_error("series is not group-like");
    }
    Gaussian g;
    g.W = PolyMatrix(n, n);
    Series logH(N, Grading::IDegree, 0, true);
    for (const auto& [k, c] : connected.terms()) {
        if (key_tri(k) == 0 && key_legs(k) == 2) {
            Diagram d = decode(k);
            int a = d.tail(0), b = d.head(0), lab = d.label[0];
            int i = d.nodes[a].a, j = d.nodes[b].a;
            if (i == j) {
                int e = std::abs(lab);
                if (e == 0) g.W(i, i) += LaurentPoly::monomial(2 * c, 0);
                else {
                    g.W(i, i) += LaurentPoly::monomial(c, e);
                    g.W(i, i) += LaurentPoly::monomial(c, -e);
                }
            } else {
                g.W(i, j) += LaurentPoly::monomial(c, lab);
                g.W(j, i) += LaurentPoly::monomial(c, -lab);
            }
            continue;
        }
        logH.add_key(k, c);
    }
    g.H = logH.exp_disjoint();
    return g;
}

Gaussian lift_and_split(const TangleProgram& p, const ComponentMap& c, int N) {
    return split_gaussian(z_circle(p, c, functor_data(N + 1)), c.size(), N);
}

Gaussian lift_and_split(const TangleProgram& p, int N) { return lift_and_split(p, trace_components(p), N); }

}  // namespace kricker
