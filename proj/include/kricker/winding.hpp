#pragma once

#include "kricker/matrix.hpp"
#include "kricker/presentation.hpp"

namespace kricker {

struct WindingMatrix {
    PolyMatrix W;
    std::vector<BasePoint> base_points;
};

// Signed disk-pass count from the base point to each traversal event, per component.
std::vector<std::vector<int>> sheet_indices(const ComponentMap& c);
WindingMatrix winding_matrix(const ComponentMap& c);
WindingMatrix winding_matrix(const TangleProgram& p);
WindingMatrix apply_base_point_move(const WindingMatrix& w, int i, int eps);

struct Signatures {
    QMatrix linking;
    int sigma_plus = 0;
    int sigma_minus = 0;
    int nullity = 0;
};
Signatures linking_and_signatures(const PolyMatrix& W);

struct AlexanderData {
    LaurentPoly alexander;
    long h1_order = 1;
};
AlexanderData alexander_and_h1(const PolyMatrix& W);

int rho_p(long h1_order, long p);
bool is_prime(long p);

}  // namespace kricker
