#pragma once

#include "kricker/omega.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kricker {

enum class Move { Reidemeister, BasePoint, Kirby1, Kirby2, Orientation };
Move parse_move(const std::string& name);

struct NamedProgram {
    std::string name;
    TangleProgram program;
};
// All *.pres files of a directory, sorted by name.
std::vector<NamedProgram> load_corpus(const std::string& dir);

struct MoveCase {
    std::string label;
    std::string result;  // "equal", "unresolved", or "skipped: reason"
    double seconds = 0;
};

// Compares z_tilde of two programs; the second module is reached along E (searched among
// permutation matrices when E is null).
std::string compare_z_tilde(const TangleProgram& a, const TangleProgram& b, int N, ReducerBudget budget,
                            const PolyMatrix* E = nullptr);

// Permutation matrix E with E A E* = B.
std::optional<PolyMatrix> find_permutation(const PolyMatrix& A, const PolyMatrix& B);
// E = I + c t^k e_ij with E A E* = B, c = +-1, |k| <= 2.
std::optional<PolyMatrix> find_slide(const PolyMatrix& A, const PolyMatrix& B);

// Runs the invariance checks of one move over the programs. Kirby II pairs are programs named X.a and X.b.
std::vector<MoveCase> check_moves(Move m, const std::vector<NamedProgram>& programs, int N, ReducerBudget budget = {});

}  // namespace kricker
