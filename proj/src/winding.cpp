#include "kricker/winding.hpp"

namespace kricker {

std::vector<std::vector<int>> sheet_indices(const ComponentMap& c) {
    std::vector<std::vector<int>> s(c.size());
    for (int i = 0; i < c.size(); ++i) {
        int cur = 0;
        for (const auto& t : c.components[i].events) {
            if (t.kind == Event::DiskPass) cur += t.sign;
            s[i].push_back(cur);
        }
    }
    return s;
}

WindingMatrix winding_matrix(const ComponentMap& c) {
    int n = c.size();
    WindingMatrix w;
    w.W = PolyMatrix(n, n);
    auto s = sheet_indices(c);
    // Locate every crossing occurrence in traversal order.
    std::vector<std::vector<std::pair<int, int>>> occ(c.events.size());
    for (int i = 0; i < n; ++i) {
        const auto& ev = c.components[i].events;
        for (size_t k = 0; k < ev.size(); ++k)
            if (ev[k].kind == Event::Crossing) occ[ev[k].event].push_back({i, s[i][k]});
    }
    Rational half(1, 2);
    for (size_t e = 0; e < c.events.size(); ++e) {
        if (c.events[e].kind != Event::Crossing) continue;
        int sg = c.events[e].sign;
        auto [i, si] = occ[e][0];
        auto [j, sj] = occ[e][1];
        if (i == j) {
            int eps = si - sj;
            w.W(i, i) += LaurentPoly::monomial(half * sg, eps) + LaurentPoly::monomial(half * sg, -eps);
        } else {
            w.W(i, j) += LaurentPoly::monomial(half * sg, si - sj);
            w.W(j, i) += LaurentPoly::monomial(half * sg, sj - si);
        }
    }
    for (const auto& comp : c.components) w.base_points.push_back(comp.base);
    return w;
}

WindingMatrix winding_matrix(const TangleProgram& p) { return winding_matrix(trace_components(p)); }

WindingMatrix apply_base_point_move(const WindingMatrix& w, int i, int eps) {
    WindingMatrix r = w;
    int n = w.W.rows();
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        r.W(i, j) = r.W(i, j).shift(-eps);
        r.W(j, i) = r.W(j, i).shift(eps);
    }
    return r;
}

Signatures linking_and_signatures(const PolyMatrix& W) {
    Signatures out;
    out.linking = eval_matrix(W, 1);
    QMatrix a = out.linking;
    int n = static_cast<int>(a.size());
    std::vector<bool> alive(n, true);
    int remaining = n;
    while (remaining > 0) {
        int piv = -1;
        for (int i = 0; i < n && piv < 0; ++i)
            if (alive[i] && a[i][i] != 0) piv = i;
        if (piv >= 0) {
            (a[piv][piv] > 0 ? out.sigma_plus : out.sigma_minus)++;
            alive[piv] = false;
            --remaining;
            for (int i = 0; i < n; ++i) {
                if (!alive[i] || a[i][piv] == 0) continue;
                Rational f = a[i][piv] / a[piv][piv];
                for (int j = 0; j < n; ++j)
                    if (alive[j]) a[i][j] -= f * a[piv][j];
            }
            continue;
        }
        int p = -1, q = -1;
        for (int i = 0; i < n && p < 0; ++i)
            for (int j = 0; j < n; ++j)
                if (alive[i] && alive[j] && i != j && a[i][j] != 0) {
                    p = i;
                    q = j;
                    break;
                }
        if (p < 0) {
            out.nullity = remaining;
            break;
        }
        // Replace row/column p by p + q to create a nonzero diagonal entry 2 a_pq.
        for (int j = 0; j < n; ++j)
            if (alive[j]) a[p][j] += a[q][j];
        for (int i = 0; i < n; ++i)
            if (alive[i]) a[i][p] += a[i][q];
    }
    return out;
}

AlexanderData alexander_and_h1(const PolyMatrix& W) {
    AlexanderData d;
    Rational d1 = determinant(eval_matrix(W, 1));
    if (d1 == 0) throw std::domain_error("not a rational homology sphere presentation");
    d.alexander = determinant(W.transpose()).unit_normalized();
    Rational a = abs(d1);
    if (a.get_den() != 1) throw std::domain_error("non-integral presentation");
    d.h1_order = a.get_num().get_si();
    return d;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int rho_p(long h1_order, long p) {
    if (!is_prime(p)) throw std::invalid_argument("rho_p needs a prime, got " + std::to_string(p));
    if (h1_order <= 0) throw std::invalid_argument("order must be positive");
    int v = 0;
    while (h1_order % p == 0) {
        h1_order /= p;
        ++v;
    }
    return -v;
}

}  // namespace kricker
