#include "kricker/horizontal.hpp"

#include <stdexcept>

namespace kricker {

int chord_letter(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == j || i < 0 || j >= n) throw std::invalid_argument("chord endpoints");
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - 1 - a;
    return idx + (j - i - 1);
}

std::pair<int, int> letter_chord(int n, int letter) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (letter-- == 0) return {i, j};
    throw std::invalid_argument("letter out of range");
}

HPoly HPoly::one(int n, int D) {
    HPoly p(n, D);
    p.terms[{}] = 1;
    return p;
}

HPoly HPoly::chord(int n, int D, int i, int j, const Rational& c) {
    HPoly p(n, D);
    p.add({chord_letter(n, i, j)}, c);
    return p;
}

void HPoly::add(const HWord& w, const Rational& c) {
    if (c == 0 || static_cast<int>(w.size()) > D) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

HPoly& HPoly::operator+=(const HPoly& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r(a.n, std::min(a.D, b.D));
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            if (static_cast<int>(wa.size() + wb.size()) > r.D) continue;
            HWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

HPoly HPoly::scaled(const Rational& c) const {
    HPoly r(n, D);
    for (const auto& [w, x] : terms) r.add(w, x * c);
    return r;
}

HPoly HPoly::degree_part(int d) const {
    HPoly r(n, D);
    for (const auto& [w, x] : terms)
        if (static_cast<int>(w.size()) == d) r.terms[w] = x;
    return r;
}

HPoly commutator(const HPoly& a, const HPoly& b) { return a * b - b * a; }

HPoly hexp(const HPoly& x) {
    if (x.terms.count({})) throw std::domain_error("exp of a series with constant term");
    HPoly result = HPoly::one(x.n, x.D), power = HPoly::one(x.n, x.D);
    for (int k = 1; k <= x.D; ++k) {
        power = (power * x).scaled(Rational(1, k));
        result += power;
    }
    return result;
}

HPoly hinverse(const HPoly& x) {
    auto it = x.terms.find({});
    if (it == x.terms.end() || it->second != 1) throw std::domain_error("inverse needs constant term 1");
    HPoly y = x - HPoly::one(x.n, x.D);
    HPoly result = HPoly::one(x.n, x.D), power = HPoly::one(x.n, x.D);
    for (int k = 1; k <= x.D; ++k) {
        power = (power * y).scaled(-1);
        result += power;
    }
    return result;
}

HPoly substitute(const HPoly& p, const std::vector<HPoly>& images) {
    if (images.empty()) throw std::invalid_argument("substitute: no images");
    int n = images[0].n, D = std::min(p.D, images[0].D);
    HPoly r(n, D);
    for (const auto& [w, c] : p.terms) {
        HPoly term = HPoly::one(n, D);
        for (int letter : w) term = term * images.at(letter);
        r += term.scaled(c);
    }
    return r;
}

namespace {

using Row = std::map<HWord, Rational>;

void eliminate_into(const std::map<HWord, Row>& rows, Row& v) {
    auto it = v.end();
    while (it != v.begin()) {
        --it;
        auto r = rows.find(it->first);
        if (r == rows.end()) continue;
        Rational c = it->second;
        HWord pivot = it->first;
        for (const auto& [w, x] : r->second) {
            Rational& slot = v[w];
            slot -= c * x;
        }
        for (auto jt = v.begin(); jt != v.end();) jt = jt->second == 0 ? v.erase(jt) : std::next(jt);
        it = v.upper_bound(pivot);
    }
}

void words_of_length(int letters, int len, std::vector<HWord>& out) {
    HWord w(len, 0);
    while (true) {
        out.push_back(w);
        int k = len - 1;
        while (k >= 0 && ++w[k] == letters) w[k--] = 0;
        if (k < 0) break;
    }
}

}  // namespace

HorizontalQuotient::HorizontalQuotient(int n, int D) : n_(n), D_(D), rows_(D + 1) {
    int letters = n * (n - 1) / 2;
    std::vector<HPoly> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                rel.push_back(commutator(HPoly::chord(n, 2, i, j), HPoly::chord(n, 2, i, k) + HPoly::chord(n, 2, j, k)));
                for (int l = k + 1; l < n; ++l)
                    if (l != i && l != j) rel.push_back(commutator(HPoly::chord(n, 2, i, j), HPoly::chord(n, 2, k, l)));
            }
    for (int d = 2; d <= D; ++d) {
        auto& rows = rows_[d];
        for (int left = 0; left <= d - 2; ++left) {
            std::vector<HWord> us, vs;
            words_of_length(letters, left, us);
            words_of_length(letters, d - 2 - left, vs);
            for (const HPoly& r : rel)
                for (const HWord& u : us)
                    for (const HWord& v : vs) {
                        Row row;
                        for (const auto& [w, c] : r.terms) {
                            HWord x = u;
                            x.insert(x.end(), w.begin(), w.end());
                            x.insert(x.end(), v.begin(), v.end());
                            row[x] += c;
                        }
                        eliminate_into(rows, row);
                        if (row.empty()) continue;
                        Rational lead = row.rbegin()->second;
                        for (auto& [w, c] : row) c /= lead;
                        HWord pivot = row.rbegin()->first;
                        rows.emplace(pivot, std::move(row));
                    }
        }
    }
}

HPoly HorizontalQuotient::normal_form(const HPoly& p) const {
    if (p.n != n_) throw std::invalid_argument("strand count mismatch");
    HPoly r(p.n, p.D);
    std::vector<Row> parts(D_ + 1);
    for (const auto& [w, c] : p.terms) {
        if (static_cast<int>(w.size()) > D_) throw std::invalid_argument("degree beyond the quotient");
        parts[w.size()][w] = c;
    }
    for (int d = 0; d <= D_; ++d) {
        eliminate_into(rows_[d], parts[d]);
        for (const auto& [w, c] : parts[d]) r.add(w, c);
    }
    return r;
}

int HorizontalQuotient::dimension(int d) const {
    long total = 1;
    for (int k = 0; k < d; ++k) total *= n_ * (n_ - 1) / 2;
    return static_cast<int>(total - static_cast<long>(rows_[d].size()));
}

namespace {

HPoly phi_of(int D, const Rational& a, const Rational& b1, const Rational& b2) {
    HPoly t12 = HPoly::chord(3, D, 0, 1), t23 = HPoly::chord(3, D, 1, 2);
    HPoly c = commutator(t12, t23);
    HPoly L = c.scaled(a) + commutator(t12, c).scaled(b1) + commutator(t23, c).scaled(b2);
    return hexp(L);
}

// phi(x, y) with x in place of t12 and y in place of t23.
HPoly phi_at(const HPoly& phi, const HPoly& x, const HPoly& y) {
    HPoly zero(x.n, x.D);
    std::vector<HPoly> images(3, zero);
    images[chord_letter(3, 0, 1)] = x;
    images[chord_letter(3, 1, 2)] = y;
    images[chord_letter(3, 0, 2)] = zero;
    return substitute(phi, images);
}

HPoly hexagon_pos(const HPoly& phi, const HorizontalQuotient& q) {
    int D = phi.D;
    auto t = [&](int i, int j) { return HPoly::chord(3, D, i, j); };
    HPoly lhs = phi_at(phi, t(1, 2), t(0, 2)) * hexp((t(0, 1) + t(0, 2)).scaled(Rational(1, 2))) * phi_at(phi, t(0, 1), t(1, 2));
    HPoly rhs = hexp(t(0, 2).scaled(Rational(1, 2))) * phi_at(phi, t(0, 1), t(0, 2)) * hexp(t(0, 1).scaled(Rational(1, 2)));
    return q.normal_form(lhs - rhs);
}

HPoly hexagon_neg(const HPoly& phi, const HorizontalQuotient& q) {
    int D = phi.D;
    auto t = [&](int i, int j) { return HPoly::chord(3, D, i, j); };
    HPoly inv = hinverse(phi);
    HPoly lhs = phi_at(inv, t(0, 2), t(0, 1)) * hexp((t(0, 2) + t(1, 2)).scaled(Rational(1, 2))) * phi_at(inv, t(0, 1), t(1, 2));
    HPoly rhs = hexp(t(0, 2).scaled(Rational(1, 2))) * phi_at(inv, t(0, 2), t(1, 2)) * hexp(t(1, 2).scaled(Rational(1, 2)));
    return q.normal_form(lhs - rhs);
}

HPoly pentagon(const HPoly& phi, const HorizontalQuotient& q) {
    int D = phi.D;
    auto t = [&](int i, int j) { return HPoly::chord(4, D, i, j); };
    HPoly lhs = phi_at(phi, t(0, 1), t(1, 2) + t(1, 3)) * phi_at(phi, t(0, 2) + t(1, 2), t(2, 3));
    HPoly rhs = phi_at(phi, t(1, 2), t(2, 3)) * phi_at(phi, t(0, 1) + t(0, 2), t(1, 3) + t(2, 3)) * phi_at(phi, t(0, 1), t(1, 2));
    return q.normal_form(lhs - rhs);
}

// Solves base + sum_k x_k dirs[k] = 0 exactly; free unknowns are set to 0.
std::vector<Rational> solve_affine(const HPoly& base, const std::vector<HPoly>& dirs) {
    std::map<HWord, int> index;
    for (const auto& [w, c] : base.terms) index.emplace(w, 0);
    for (const auto& d : dirs)
        for (const auto& [w, c] : d.terms) index.emplace(w, 0);
    size_t m = dirs.size();
    std::vector<std::vector<Rational>> A;
    for (const auto& [w, unused] : index) {
        std::vector<Rational> row(m + 1);
        for (size_t k = 0; k < m; ++k) {
            auto it = dirs[k].terms.find(w);
            if (it != dirs[k].terms.end()) row[k] = it->second;
        }
        auto it = base.terms.find(w);
        if (it != base.terms.end()) row[m] = -it->second;
        A.push_back(row);
    }
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < m && r < A.size(); ++c) {
        size_t p = r;
        while (p < A.size() && A[p][c] == 0) ++p;
        if (p == A.size()) continue;
        std::swap(A[p], A[r]);
        Rational inv = 1 / A[r][c];
        for (auto& x : A[r]) x *= inv;
        for (size_t i = 0; i < A.size(); ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (size_t k = 0; k <= m; ++k) A[i][k] -= f * A[r][k];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < A.size(); ++i)
        if (A[i][m] != 0) throw std::domain_error("no rational associator in the even ansatz");
    std::vector<Rational> x(m);
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = A[i][m];
    return x;
}

}  // namespace

Associator compute_associator(int N) {
    if (N > 3) throw std::domain_error("associator beyond degree 3");
    const int D = 3;
    HorizontalQuotient q(3, D);
    Associator A;
    A.degree = N;
    HPoly r0 = hexagon_pos(phi_of(D, 0, 0, 0), q).degree_part(2);
    HPoly r1 = hexagon_pos(phi_of(D, 1, 0, 0), q).degree_part(2);
    A.a = solve_affine(r0, {r1 - r0})[0];
    HPoly s0 = hexagon_pos(phi_of(D, A.a, 0, 0), q).degree_part(3);
    HPoly s1 = hexagon_pos(phi_of(D, A.a, 1, 0), q).degree_part(3);
    HPoly s2 = hexagon_pos(phi_of(D, A.a, 0, 1), q).degree_part(3);
    auto b = solve_affine(s0, {s1 - s0, s2 - s0});
    A.b1 = b[0];
    A.b2 = b[1];
    HPoly full = phi_of(D, A.a, A.b1, A.b2);
    A.phi = HPoly(3, N);
    A.phi += full;
    A.phi_inverse = HPoly(3, N);
    A.phi_inverse += hinverse(full);
    return A;
}

AssociatorResiduals associator_residuals(const Associator& A) {
    HorizontalQuotient q3(3, A.degree), q4(4, A.degree);
    AssociatorResiduals r;
    r.hexagon_pos = hexagon_pos(A.phi, q3);
    r.hexagon_neg = hexagon_neg(A.phi, q3);
    r.pentagon = pentagon(A.phi, q4);
    return r;
}

}  // namespace kricker
