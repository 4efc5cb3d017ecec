#include "kricker/series.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace kricker {

int key_degree(const Key& k, Grading g) {
    if (g == Grading::IDegree) return key_tri(k) + key_isolated(k);
    return (key_tri(k) + key_legs(k)) / 2;
}

Key empty_key() { return Key{0, 0, 0, 0}; }

Series Series::one(int N, Grading g, int m, bool gauge) {
    Series s(N, g, m, gauge);
    s.terms_[empty_key()] = 1;
    return s;
}

Rational Series::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::coeff(const Diagram& d) const {
    Canonical c = canonical_form(d, m_, gauge_);
    if (c.sign == 0) return 0;
    return c.sign * coeff(c.key);
}

void Series::add_key(const Key& k, const Rational& c) {
    if (c == 0 || key_degree(k, g_) > N_) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Series::add(const Diagram& d, const Rational& c) {
    if (c == 0) return;
    int deg = g_ == Grading::IDegree ? d.i_degree() : (d.num_tri() + d.num_legs()) / 2;
    if (deg > N_) return;
    Canonical k = canonical_form(d, m_, gauge_);
    if (k.sign == 0) return;
    add_key(k.key, k.sign * c);
}

void Series::check_compatible(const Series& o) const {
    if (g_ != o.g_ || m_ != o.m_ || gauge_ != o.gauge_) throw std::invalid_argument("series from different spaces");
}

Series& Series::operator+=(const Series& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_key(k, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_key(k, -c);
    return *this;
}

Series Series::scaled(const Rational& c) const {
    Series r = empty_like();
    if (c == 0) return r;
    for (const auto& [k, x] : terms_) r.terms_[k] = x * c;
    return r;
}

Series Series::truncated(int N) const {
    Series r = empty_like();
    r.N_ = N;
    for (const auto& [k, c] : terms_) r.add_key(k, c);
    return r;
}

Series Series::degree_part(int d) const {
    Series r = empty_like();
    for (const auto& [k, c] : terms_)
        if (key_degree(k, g_) == d) r.terms_[k] = c;
    return r;
}

Series Series::connected_part() const {
    Series r = empty_like();
    for (const auto& [k, c] : terms_)
        if (decode(k).num_components() == 1) r.terms_[k] = c;
    return r;
}

Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    Series r = a.empty_like();
    r.N_ = std::min(a.N_, b.N_);
    for (const auto& [ka, ca] : a.terms_) {
        int da = key_degree(ka, a.g_);
        Diagram x = decode(ka);
        for (const auto& [kb, cb] : b.terms_) {
            if (da + key_degree(kb, a.g_) > r.N_) continue;
            r.add(Diagram::disjoint_union(x, decode(kb)), ca * cb);
        }
    }
    return r;
}

Series Series::exp_disjoint() const {
    for (const auto& [k, c] : terms_)
        if (key_degree(k, g_) == 0) throw std::domain_error("exp of a series with a degree-0 part");
    Series result = one_like(), power = one_like();
    for (int n = 1; !power.is_zero(); ++n) {
        power = (power * *this).scaled(Rational(1, n));
        result += power;
    }
    return result;
}

Series Series::log_disjoint() const {
    if (coeff(empty_key()) != 1) throw std::domain_error("log of a series without unit constant term");
    Series x = *this - one_like();
    for (const auto& [k, c] : x.terms_)
        if (key_degree(k, g_) == 0) throw std::domain_error("log of a series with a degree-0 part");
    Series result = empty_like(), power = one_like();
    for (int n = 1;; ++n) {
        power = power * x;
        if (power.is_zero()) break;
        result += power.scaled(Rational(n % 2 ? 1 : -1, n));
    }
    return result;
}

namespace {

void compact_interval(Diagram& d) {
    std::map<int, std::vector<std::pair<int, int>>> by;
    for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
        if (d.nodes[v].leg) by[d.nodes[v].a].push_back({d.nodes[v].b, v});
    for (auto& [a, legs] : by) {
        std::sort(legs.begin(), legs.end());
        for (size_t p = 0; p < legs.size(); ++p) d.nodes[legs[p].second].b = static_cast<int>(p);
    }
}

}  // namespace

std::map<std::pair<Key, Key>, Rational> Series::coproduct(bool compact) const {
    std::map<std::pair<Key, Key>, Rational> out;
    for (const auto& [k, c] : terms_) {
        std::vector<Diagram> comps = decode(k).components();
        int n = static_cast<int>(comps.size());
        if (n > 20) throw BudgetExceeded("coproduct components");
        for (long mask = 0; mask < (1L << n); ++mask) {
            Diagram left, right;
            for (int i = 0; i < n; ++i) {
                if (mask >> i & 1) left = Diagram::disjoint_union(left, comps[i]);
                else right = Diagram::disjoint_union(right, comps[i]);
            }
            if (compact) {
                compact_interval(left);
                compact_interval(right);
            }
            Canonical cl = canonical_form(left, m_, gauge_), cr = canonical_form(right, m_, gauge_);
            if (cl.sign == 0 || cr.sign == 0) continue;
            Rational& slot = out[{cl.key, cr.key}];
            slot += c * cl.sign * cr.sign;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool Series::is_group_like(bool compact) const {
    if (coeff(empty_key()) != 1) return false;
    std::map<std::pair<Key, Key>, Rational> sq;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : terms_)
            if (key_degree(ka, g_) + key_degree(kb, g_) <= N_) sq[{ka, kb}] = ca * cb;
    return coproduct(compact) == sq;
}

std::string Series::str() const {
    if (terms_.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [k, c] : terms_) os << to_string(c) << " : " << decode(k).str() << "\n";
    return os.str();
}

Series Series::parse(const std::string& text, int N, Grading g, int m, bool gauge) {
    Series s(N, g, m, gauge);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line == "0") continue;
        auto colon = line.find(" : ");
        if (colon == std::string::npos) throw std::invalid_argument("series text: expected 'coeff : diagram'");
        s.add(Diagram::parse(line.substr(colon + 3)), parse_rational(line.substr(0, colon)));
    }
    return s;
}

}  // namespace kricker
