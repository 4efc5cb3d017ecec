#include "kricker/diagram.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <tuple>

namespace kricker {

int Diagram::add_tri() {
    nodes.push_back(Node{});
    return num_nodes() - 1;
}

int Diagram::add_leg(int a, int b) {
    Node n;
    n.leg = true;
    n.a = a;
    n.b = b;
    nodes.push_back(n);
    return num_nodes() - 1;
}

int Diagram::add_edge(int from, int to, int k) {
    int e = num_edges();
    label.push_back(k);
    owner.push_back(from);
    owner.push_back(to);
    nodes[from].he.push_back(2 * e);
    nodes[to].he.push_back(2 * e + 1);
    return e;
}

int Diagram::num_tri() const {
    int c = 0;
    for (const auto& n : nodes) c += n.leg ? 0 : 1;
    return c;
}

int Diagram::num_legs() const { return num_nodes() - num_tri(); }

std::vector<int> Diagram::legs() const {
    std::vector<int> r;
    for (int v = 0; v < num_nodes(); ++v)
        if (nodes[v].leg) r.push_back(v);
    return r;
}

void Diagram::attach(int h, int v, int slot) {
    owner[h] = v;
    nodes[v].he[slot] = h;
}

void Diagram::erase(const std::vector<bool>& dead_nodes, const std::vector<bool>& dead_edges) {
    std::vector<int> nmap(num_nodes(), -1), emap(num_edges(), -1);
    int nn = 0, ne = 0;
    for (int v = 0; v < num_nodes(); ++v)
        if (!dead_nodes[v]) nmap[v] = nn++;
    for (int e = 0; e < num_edges(); ++e)
        if (!dead_edges[e]) emap[e] = ne++;
    auto hmap = [&](int h) {
        if (emap[h / 2] < 0) throw std::logic_error("dangling half-edge");
        return 2 * emap[h / 2] + (h & 1);
    };
    std::vector<Node> nn_nodes;
    for (int v = 0; v < num_nodes(); ++v) {
        if (dead_nodes[v]) continue;
        Node x = nodes[v];
        for (int& h : x.he) h = hmap(h);
        nn_nodes.push_back(std::move(x));
    }
    std::vector<int> nl, no;
    for (int e = 0; e < num_edges(); ++e) {
        if (dead_edges[e]) continue;
        nl.push_back(label[e]);
        for (int s = 0; s < 2; ++s) {
            int o = nmap[owner[2 * e + s]];
            if (o < 0) throw std::logic_error("edge on removed node");
            no.push_back(o);
        }
    }
    nodes = std::move(nn_nodes);
    label = std::move(nl);
    owner = std::move(no);
}

void join_legs_inplace(Diagram& y, int v, int w, int k, std::vector<bool>& dn, std::vector<bool>& de) {
    int hv = y.nodes[v].he[0] ^ 1, hw = y.nodes[w].he[0] ^ 1;
    int av = y.owner[hv], aw = y.owner[hw];
    if (av == w) throw std::domain_error("vertex-free loop");
    int e = y.num_edges();
    y.label.push_back(k);
    y.owner.push_back(av);
    y.owner.push_back(aw);
    *std::find(y.nodes[av].he.begin(), y.nodes[av].he.end(), hv) = 2 * e;
    *std::find(y.nodes[aw].he.begin(), y.nodes[aw].he.end(), hw) = 2 * e + 1;
    dn.resize(y.num_nodes(), false);
    de.resize(y.num_edges(), false);
    dn[v] = dn[w] = true;
    de[hv / 2] = de[hw / 2] = true;
}

Diagram join_legs(const Diagram& x, int v, int w, int k) {
    Diagram y = x;
    std::vector<bool> dn(y.num_nodes(), false), de(y.num_edges(), false);
    join_legs_inplace(y, v, w, k, dn, de);
    y.erase(dn, de);
    return y;
}

namespace {

std::vector<int> component_ids(const Diagram& d, int* count) {
    std::vector<int> parent(d.num_nodes());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < d.num_edges(); ++e) parent[find(d.tail(e))] = find(d.head(e));
    std::vector<int> id(d.num_nodes(), -1), root_id(d.num_nodes(), -1);
    int c = 0;
    for (int v = 0; v < d.num_nodes(); ++v) {
        int r = find(v);
        if (root_id[r] < 0) root_id[r] = c++;
        id[v] = root_id[r];
    }
    *count = c;
    return id;
}

}  // namespace

std::vector<Diagram> Diagram::components() const {
    int c = 0;
    std::vector<int> id = component_ids(*this, &c);
    std::vector<Diagram> out(c);
    std::vector<int> local(num_nodes()), emap(num_edges());
    for (int v = 0; v < num_nodes(); ++v) {
        Diagram& t = out[id[v]];
        local[v] = t.num_nodes();
        Node x = nodes[v];
        x.he.clear();
        t.nodes.push_back(x);
    }
    for (int e = 0; e < num_edges(); ++e) {
        Diagram& t = out[id[tail(e)]];
        emap[e] = t.num_edges();
        t.label.push_back(label[e]);
        t.owner.push_back(local[tail(e)]);
        t.owner.push_back(local[head(e)]);
    }
    for (int v = 0; v < num_nodes(); ++v) {
        Diagram& t = out[id[v]];
        for (int h : nodes[v].he) t.nodes[local[v]].he.push_back(2 * emap[h / 2] + (h & 1));
    }
    for (int p : isolated) {
        Diagram t;
        t.isolated.push_back(p);
        out.push_back(t);
    }
    return out;
}

int Diagram::num_components() const {
    int c = 0;
    component_ids(*this, &c);
    return c + static_cast<int>(isolated.size());
}

Diagram Diagram::disjoint_union(const Diagram& x, const Diagram& y) {
    Diagram r = x;
    int off = x.num_nodes(), eoff = x.num_edges();
    for (Node n : y.nodes) {
        for (int& h : n.he) h += 2 * eoff;
        r.nodes.push_back(n);
    }
    r.label.insert(r.label.end(), y.label.begin(), y.label.end());
    for (int o : y.owner) r.owner.push_back(o + off);
    r.isolated.insert(r.isolated.end(), y.isolated.begin(), y.isolated.end());
    return r;
}

void Diagram::check() const {
    if (owner.size() != 2 * label.size()) throw std::logic_error("malformed diagram");
    std::vector<int> seen(owner.size(), 0);
    for (int v = 0; v < num_nodes(); ++v) {
        size_t want = nodes[v].leg ? 1 : 3;
        if (nodes[v].he.size() != want) throw std::logic_error("wrong valence at node " + std::to_string(v));
        for (int h : nodes[v].he) {
            if (h < 0 || h >= static_cast<int>(owner.size()) || owner[h] != v)
                throw std::logic_error("half-edge owner mismatch");
            ++seen[h];
        }
    }
    for (int s : seen)
        if (s != 1) throw std::logic_error("half-edge not attached exactly once");
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

struct Search {
    const Diagram& d;
    int m;
    bool gauge;
    long budget;
    long leaves = 0;
    bool have = false;
    Key best;
    int best_sign = 0;
    bool conflict = false;
    std::vector<int> best_order, odd_order;

    Search(const Diagram& dd, int mm, bool g, long b) : d(dd), m(mm), gauge(g), budget(b) {}

    // Labels after pushing t through trivalent vertices so that a spanning forest reads t^0.
    // Forest roots are the first leg of each component (else its first vertex); parallel
    // candidates are resolved by the largest outward label, which is gauge invariant.
    std::vector<int> gauge_labels(const std::vector<int>& cell, const std::vector<int>& order) const {
        int n = d.num_nodes();
        std::vector<int> phi(n, 0);
        std::vector<char> done(n, 0);
        auto grow = [&](int root) {
            std::deque<int> q{root};
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                std::map<int, int> best;
                for (int h : d.nodes[u].he) {
                    int v = d.owner[h ^ 1];
                    if (v == u || d.nodes[v].leg || done[v]) continue;
                    auto it = best.find(cell[v]);
                    if (it == best.end() || d.out_label(h, m) > d.out_label(it->second, m)) best[cell[v]] = h;
                }
                for (const auto& [pos, h] : best) {
                    int v = d.owner[h ^ 1];
                    phi[v] = d.out_label(h, m) + phi[u];
                    done[v] = 1;
                    q.push_back(v);
                }
            }
        };
        int T = d.num_tri();
        for (int p = T; p < n; ++p) {
            int leg = order[p];
            int anchor = d.leg_anchor(leg);
            if (d.nodes[anchor].leg || done[anchor]) continue;
            phi[anchor] = d.out_label(d.nodes[leg].he[0], m);
            done[anchor] = 1;
            grow(anchor);
        }
        for (int p = 0; p < T; ++p) {
            int u = order[p];
            if (done[u]) continue;
            done[u] = 1;
            grow(u);
        }
        std::vector<int> lab(d.num_edges());
        for (int e = 0; e < d.num_edges(); ++e) lab[e] = d.label[e] + phi[d.tail(e)] - phi[d.head(e)];
        return lab;
    }

    int refine(std::vector<int>& cell) const {
        int n = d.num_nodes();
        int count = 0;
        {
            std::vector<int> s = cell;
            std::sort(s.begin(), s.end());
            count = static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
        }
        std::vector<std::vector<int>> sig(n);
        std::vector<int> idx(n);
        while (true) {
            for (int v = 0; v < n; ++v) {
                std::vector<std::pair<int, int>> nb;
                for (int h : d.nodes[v].he) nb.emplace_back(cell[d.owner[h ^ 1]], gauge ? 0 : d.out_label(h, m));
                std::sort(nb.begin(), nb.end());
                auto& s = sig[v];
                s.assign(1, cell[v]);
                for (auto& p : nb) {
                    s.push_back(p.first);
                    s.push_back(p.second);
                }
            }
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int x, int y) { return sig[x] < sig[y]; });
            int r = -1;
            for (int i = 0; i < n; ++i) {
                if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++r;
                cell[idx[i]] = r;
            }
            int nc = n == 0 ? 0 : r + 1;
            if (nc == count) return nc;
            count = nc;
        }
    }

    void leaf(const std::vector<int>& cell) {
        if (++leaves > budget) throw BudgetExceeded("canonical labeling");
        int n = d.num_nodes(), E = d.num_edges();
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[cell[v]] = v;
        std::vector<int> lab = gauge ? gauge_labels(cell, order) : d.label;
        struct Ed {
            int lo, hi, k, e;
            bool flipped;
        };
        std::vector<Ed> ed(E);
        for (int e = 0; e < E; ++e) {
            int a = cell[d.tail(e)], b = cell[d.head(e)], k = lab[e];
            if (a < b) ed[e] = {a, b, k, e, false};
            else if (a > b) ed[e] = {b, a, m - k, e, true};
            else ed[e] = {a, a, std::min(k, m - k), e, k > m - k};
        }
        std::sort(ed.begin(), ed.end(),
                  [](const Ed& x, const Ed& y) { return std::tie(x.lo, x.hi, x.k) < std::tie(y.lo, y.hi, y.k); });
        std::vector<int> hid(2 * E);
        for (int r = 0; r < E; ++r) {
            int e = ed[r].e;
            hid[2 * e + (ed[r].flipped ? 1 : 0)] = 2 * r;
            hid[2 * e + (ed[r].flipped ? 0 : 1)] = 2 * r + 1;
        }
        int sign = 1;
        for (int v = 0; v < n; ++v) {
            if (d.nodes[v].leg) continue;
            const auto& he = d.nodes[v].he;
            int x = hid[he[0]], y = hid[he[1]], z = hid[he[2]];
            int inv = (x > y) + (x > z) + (y > z);
            if (inv & 1) sign = -sign;
        }
        Key key;
        int T = d.num_tri();
        key.reserve(4 + d.isolated.size() + 2 * (n - T) + 3 * E);
        key.push_back(T);
        key.push_back(n - T);
        std::vector<int> iso = d.isolated;
        std::sort(iso.begin(), iso.end());
        key.push_back(static_cast<int>(iso.size()));
        key.insert(key.end(), iso.begin(), iso.end());
        for (int p = T; p < n; ++p) {
            key.push_back(d.nodes[order[p]].a);
            key.push_back(d.nodes[order[p]].b);
        }
        key.push_back(E);
        for (const auto& x : ed) {
            key.push_back(x.lo);
            key.push_back(x.hi);
            key.push_back(x.k);
        }
        if (!have || key < best) {
            have = true;
            best = std::move(key);
            best_sign = sign;
            best_order = order;
            conflict = false;
        } else if (key == best && sign != best_sign && !conflict) {
            conflict = true;
            odd_order = order;
        }
    }

    void run(std::vector<int> cell) {
        int n = d.num_nodes();
        int nc = refine(cell);
        if (nc == n) {
            leaf(cell);
            return;
        }
        std::vector<int> size(nc, 0);
        for (int c : cell) ++size[c];
        int target = 0;
        while (size[target] < 2) ++target;
        for (int v = 0; v < n; ++v) {
            if (cell[v] != target) continue;
            std::vector<int> c2(n);
            for (int u = 0; u < n; ++u) c2[u] = 2 * cell[u] + ((cell[u] == target && u != v) ? 1 : 0);
            run(c2);
        }
    }
};

}  // namespace

namespace {
std::atomic<long> g_leaf_budget{200000};
}  // namespace

void set_default_leaf_budget(long leaves) { g_leaf_budget = leaves; }
long default_leaf_budget() { return g_leaf_budget; }

Canonical canonical_form(const Diagram& d, int m, bool gauge, long leaf_budget) {
    if (leaf_budget < 0) leaf_budget = g_leaf_budget;
    Canonical out;
    for (int e = 0; e < d.num_edges(); ++e)
        if (d.tail(e) == d.head(e) && 2 * d.label[e] == m) return out;
    int n = d.num_nodes();
    std::vector<int> idx(n), cell(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto init = [&](int v) {
        const auto& x = d.nodes[v];
        return x.leg ? std::make_tuple(1, x.a, x.b) : std::make_tuple(0, 0, 0);
    };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return init(x) < init(y); });
    for (int i = 0, r = -1; i < n; ++i) {
        if (i == 0 || init(idx[i]) != init(idx[i - 1])) ++r;
        cell[idx[i]] = r;
    }
    Search s(d, m, gauge, leaf_budget);
    s.run(cell);
    out.key = s.best;
    out.order = s.best_order;
    if (s.conflict) {
        out.sign = 0;
        out.odd = s.odd_order;
    } else {
        out.sign = s.best_sign;
    }
    return out;
}

int key_tri(const Key& k) { return k.at(0); }
int key_legs(const Key& k) { return k.at(1); }
int key_isolated(const Key& k) { return k.at(2); }

Diagram decode(const Key& key) {
    Diagram d;
    size_t p = 0;
    int T = key.at(p++), L = key.at(p++), I = key.at(p++);
    for (int i = 0; i < I; ++i) d.isolated.push_back(key.at(p++));
    for (int i = 0; i < T; ++i) d.add_tri();
    for (int i = 0; i < L; ++i) {
        int a = key.at(p++);
        int b = key.at(p++);
        d.add_leg(a, b);
    }
    int E = key.at(p++);
    for (int i = 0; i < E; ++i) {
        int lo = key.at(p), hi = key.at(p + 1), k = key.at(p + 2);
        p += 3;
        d.add_edge(lo, hi, k);
    }
    return d;
}

// ---------------------------------------------------------------------------
// text format

std::string Diagram::str() const {
    std::ostringstream os;
    os << "vertices: [";
    for (int v = 0; v < num_nodes(); ++v) os << (v ? "," : "") << v;
    os << "]; edges: [";
    for (int e = 0; e < num_edges(); ++e)
        os << (e ? "," : "") << "(" << tail(e) << "," << head(e) << ",t^" << label[e] << ")";
    os << "]; cyclic: {";
    bool first = true;
    for (int v = 0; v < num_nodes(); ++v) {
        if (nodes[v].leg) continue;
        os << (first ? "" : ",") << v << ":(";
        first = false;
        for (size_t i = 0; i < nodes[v].he.size(); ++i) {
            int h = nodes[v].he[i];
            os << (i ? "," : "") << h / 2 << ((h & 1) ? "-" : "+");
        }
        os << ")";
    }
    os << "}; legs: {";
    first = true;
    for (int v = 0; v < num_nodes(); ++v) {
        if (!nodes[v].leg) continue;
        os << (first ? "" : ",") << v << ":(" << nodes[v].a << "," << nodes[v].b << ")";
        first = false;
    }
    os << "}; f: {}";
    if (!isolated.empty()) {
        os << "; isolated: [";
        for (size_t i = 0; i < isolated.size(); ++i) os << (i ? "," : "") << isolated[i];
        os << "]";
    }
    return os.str();
}

namespace {

std::string field(const std::string& text, const std::string& name, bool required = true) {
    std::regex re(name + R"(:\s*([\[\{][^\]\}]*[\]\}]))");
    std::smatch m;
    if (!std::regex_search(text, m, re)) {
        if (required) throw std::invalid_argument("diagram text: missing field " + name);
        return "";
    }
    return m[1].str();
}

}  // namespace

Diagram Diagram::parse(const std::string& text) {
    Diagram d;
    std::string vs = field(text, "vertices");
    int nv = 0;
    {
        std::regex num(R"(-?\d+)");
        for (auto it = std::sregex_iterator(vs.begin(), vs.end(), num); it != std::sregex_iterator(); ++it) ++nv;
    }
    d.nodes.resize(nv);
    std::string ls = field(text, "legs");
    std::regex leg(R"((\d+)\s*:\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    for (auto it = std::sregex_iterator(ls.begin(), ls.end(), leg); it != std::sregex_iterator(); ++it) {
        int v = std::stoi((*it)[1]);
        if (v >= nv) throw std::invalid_argument("diagram text: leg out of range");
        d.nodes[v].leg = true;
        d.nodes[v].a = std::stoi((*it)[2]);
        d.nodes[v].b = std::stoi((*it)[3]);
    }
    std::string es = field(text, "edges");
    std::regex edge(R"(\(\s*(\d+)\s*,\s*(\d+)\s*,\s*t\^(-?\d+)\s*\))");
    for (auto it = std::sregex_iterator(es.begin(), es.end(), edge); it != std::sregex_iterator(); ++it) {
        int a = std::stoi((*it)[1]), b = std::stoi((*it)[2]);
        if (a >= nv || b >= nv) throw std::invalid_argument("diagram text: edge out of range");
        d.add_edge(a, b, std::stoi((*it)[3]));
    }
    std::string cs = field(text, "cyclic");
    std::regex cyc(R"((\d+)\s*:\s*\(([^)]*)\))");
    std::regex half(R"((\d+)([+-]))");
    for (auto it = std::sregex_iterator(cs.begin(), cs.end(), cyc); it != std::sregex_iterator(); ++it) {
        int v = std::stoi((*it)[1]);
        if (v >= nv || d.nodes[v].leg) throw std::invalid_argument("diagram text: bad cyclic entry");
        std::string body = (*it)[2];
        std::vector<int> he;
        for (auto jt = std::sregex_iterator(body.begin(), body.end(), half); jt != std::sregex_iterator(); ++jt)
            he.push_back(2 * std::stoi((*jt)[1]) + ((*jt)[2] == "-" ? 1 : 0));
        std::vector<int> a = he, b = d.nodes[v].he;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw std::invalid_argument("diagram text: cyclic order does not match edges");
        d.nodes[v].he = he;
    }
    std::string is = field(text, "isolated", false);
    if (!is.empty()) {
        std::regex num(R"(-?\d+)");
        for (auto it = std::sregex_iterator(is.begin(), is.end(), num); it != std::sregex_iterator(); ++it)
            d.isolated.push_back(std::stoi((*it)[0]));
    }
    try {
        d.check();
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(std::string("diagram text: ") + e.what());
    }
    return d;
}

}  // namespace kricker
