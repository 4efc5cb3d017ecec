#include "kricker/moves.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <numeric>

namespace kricker {

namespace {

std::string compare_along(const ColoredValue& a, const ColoredValue& b, ReducerBudget budget, const PolyMatrix* E) {
    std::optional<PolyMatrix> found;
    if (!E) {
        found = find_permutation(a.space->presentation().W(), b.space->presentation().W());
        if (!found) return "unresolved";
        E = &*found;
    }
    if (*E * a.space->presentation().W() * E->conj_transpose() != b.space->presentation().W()) return "unresolved";
    return compare_values(transport_by(a, *E, b.space), b, budget);
}

Slice crossing(int pos, int sign) {
    Slice s;
    s.kind = sign > 0 ? Slice::CrossPos : Slice::CrossNeg;
    s.pos = pos;
    return s;
}

Slice cup(int pos, bool left_down) {
    Slice s;
    s.kind = Slice::Cup;
    s.pos = pos;
    s.left_down = left_down;
    return s;
}

Slice cap(int pos) {
    Slice s;
    s.kind = Slice::Cap;
    s.pos = pos;
    return s;
}

// First slice index at or above `from` with at least `w` strands below it.
int slot_with_width(const TangleProgram& p, int from, int w) {
    for (int k = std::max(from, 0); k < static_cast<int>(p.slices.size()); ++k)
        if (p.widths[k] >= w) return k;
    return -1;
}

struct Pair {
    std::string label;
    TangleProgram moved;
};

std::vector<Pair> reidemeister_variants(const TangleProgram& p) {
    std::vector<Pair> out;
    ComponentMap c = trace_components(p);
    auto up = [&](int k, int pos) { return c.legs[c.leg_at[k][pos]].up ? 1 : -1; };
    std::vector<int> slots;
    for (int from : {0, p.disk_index + 1}) {
        int k = slot_with_width(p, from, 2);
        if (k >= 0 && std::find(slots.begin(), slots.end(), k) == slots.end()) slots.push_back(k);
    }
    for (int k : slots) {
        std::string at = " at slice " + std::to_string(k);
        out.push_back({"R2" + at, insert_slices(p, k, {crossing(0, 1), crossing(0, -1)})});
        out.push_back({"snake" + at, insert_slices(p, k, {cup(1, up(k, 0) > 0), cap(0)})});
        if (p.widths[k] >= 3) {
            int s01 = up(k, 0) * up(k, 1), s02 = up(k, 0) * up(k, 2), s12 = up(k, 1) * up(k, 2);
            // s0 s1 s0 followed by the inverse of s1 s0 s1, every pair crossing the same way in both words
            out.push_back({"R3" + at, insert_slices(p, k,
                                                    {crossing(0, s01), crossing(1, s02), crossing(0, s12),
                                                     crossing(1, -s01), crossing(0, -s02), crossing(1, -s12)})});
        }
    }
    return out;
}

bool is_degenerate(const TangleProgram& p) {
    const PolyMatrix W = winding_matrix(p).W;
    return determinant(W).is_zero() || determinant(eval_matrix(W, 1)) == 0;
}

}  // namespace

Move parse_move(const std::string& name) {
    static const std::map<std::string, Move> names = {{"reidemeister", Move::Reidemeister},
                                                      {"basepoint", Move::BasePoint},
                                                      {"kirby1", Move::Kirby1},
                                                      {"kirby2", Move::Kirby2},
                                                      {"orientation", Move::Orientation}};
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown move '" + name + "'");
    return it->second;
}

std::vector<NamedProgram> load_corpus(const std::string& dir) {
    std::vector<NamedProgram> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".pres")
            out.push_back({entry.path().stem().string(), load_program(entry.path().string())});
    std::sort(out.begin(), out.end(), [](const NamedProgram& a, const NamedProgram& b) { return a.name < b.name; });
    return out;
}

std::optional<PolyMatrix> find_permutation(const PolyMatrix& A, const PolyMatrix& B) {
    int n = A.rows();
    if (B.rows() != n) return std::nullopt;
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    do {
        PolyMatrix E(n, n);
        for (int i = 0; i < n; ++i) E(s[i], i) = LaurentPoly(1);
        if (E * A * E.conj_transpose() == B) return E;
    } while (std::next_permutation(s.begin(), s.end()));
    return std::nullopt;
}

std::optional<PolyMatrix> find_slide(const PolyMatrix& A, const PolyMatrix& B) {
    int n = A.rows();
    if (B.rows() != n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int c : {1, -1})
                for (int k = -2; k <= 2; ++k) {
                    PolyMatrix E = PolyMatrix::identity(n);
                    E(i, j) = LaurentPoly::t(k) * LaurentPoly(c);
                    if (E * A * E.conj_transpose() == B) return E;
                }
        }
    return std::nullopt;
}

std::string compare_z_tilde(const TangleProgram& a, const TangleProgram& b, int N, ReducerBudget budget,
                            const PolyMatrix* E) {
    if (is_degenerate(a) || is_degenerate(b)) return "skipped: degenerate";
    return compare_along(z_tilde(a, N), z_tilde(b, N), budget, E);
}

std::vector<MoveCase> check_moves(Move m, const std::vector<NamedProgram>& programs, int N, ReducerBudget budget) {
    std::vector<MoveCase> out;
    auto run = [&](const std::string& label, auto&& body) {
        auto t0 = std::chrono::steady_clock::now();
        MoveCase c{label, "", 0};
        try {
            c.result = body();
        } catch (const BudgetExceeded&) {
            c.result = "unresolved";
        } catch (const std::invalid_argument& e) {
            c.result = std::string("skipped: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(c));
    };
    for (const auto& [name, p] : programs) {
        if (m == Move::Kirby2) continue;
        if (is_degenerate(p)) {
            out.push_back({name, "skipped: degenerate", 0});
            continue;
        }
        int n = trace_components(p).size();
        switch (m) {
            case Move::Reidemeister:
                for (const auto& [label, q] : reidemeister_variants(p))
                    run(name + " " + label, [&] { return compare_z_tilde(p, q, N, budget); });
                break;
            case Move::Orientation:
                for (int i = 0; i < n; ++i)
                    run(name + " reverse " + std::to_string(i), [&] {
                        PolyMatrix E = PolyMatrix::identity(n);
                        E(i, i) = LaurentPoly(-1);
                        return compare_z_tilde(p, reverse_component(p, i), N, budget, &E);
                    });
                break;
            case Move::BasePoint:
                for (int i = 0; i < n; ++i)
                    for (int dir : {1, -1}) {
                        ComponentMap c = trace_components(p);
                        ComponentMap moved = c;
                        auto e = move_base_point(moved, i, dir);
                        if (!e) continue;
                        run(name + " component " + std::to_string(i) + (dir > 0 ? " forward" : " backward"), [&] {
                            ColoredValue v0 = z_tilde(lift_and_split(p, c, N), N);
                            ColoredValue v1 = z_tilde(lift_and_split(p, moved, N), N);
                            const PolyMatrix& W0 = v0.space->presentation().W();
                            for (int s : {-1, 1}) {
                                PolyMatrix E = PolyMatrix::identity(n);
                                E(i, i) = LaurentPoly::t(s * *e);
                                if (E * W0 * E.conj_transpose() == v1.space->presentation().W())
                                    return compare_along(v0, v1, budget, &E);
                            }
                            return std::string("unresolved");
                        });
                    }
                break;
            case Move::Kirby1:
                for (int framing : {1, -1}) {
                    const TangleProgram& u = unknot_program(framing);
                    std::string f = framing > 0 ? "U+" : "U-";
                    auto stacked = [&](const TangleProgram& lower, const TangleProgram& upper) {
                        ColoredValue v = z_tilde(stack_programs(lower, upper), N);
                        ColoredValue du = disjoint_union(z_tilde(lower, N), z_tilde(upper, N));
                        return compare_along(du, v, budget, nullptr);
                    };
                    run(name + " with " + f + " above", [&] { return stacked(p, u); });
                    run(name + " with " + f + " below", [&] { return stacked(reflect_program(u), reflect_program(p)); });
                }
                break;
            case Move::Kirby2:
                break;
        }
    }
    if (m == Move::Kirby2) {
        for (const auto& a : programs) {
            if (a.name.size() < 2 || a.name.substr(a.name.size() - 2) != ".a") continue;
            std::string stem = a.name.substr(0, a.name.size() - 2);
            auto b = std::find_if(programs.begin(), programs.end(),
                                  [&](const NamedProgram& x) { return x.name == stem + ".b"; });
            if (b == programs.end()) continue;
            run(stem, [&]() -> std::string {
                if (is_degenerate(a.program) || is_degenerate(b->program)) return "skipped: degenerate";
                auto E = find_slide(winding_matrix(a.program).W, winding_matrix(b->program).W);
                if (!E) return "unresolved";
                return compare_z_tilde(a.program, b->program, N, budget, &*E);
            });
        }
    }
    return out;
}

}  // namespace kricker
