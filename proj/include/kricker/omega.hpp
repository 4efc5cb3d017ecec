#pragma once

#include "kricker/kontsevich.hpp"
#include "kricker/winding.hpp"

namespace kricker {

struct DegenerateGaussian : std::domain_error {
    DegenerateGaussian() : std::domain_error("degenerate Gaussian") {}
};

// A series of coloured diagrams in the module presented by space->presentation().
struct ColoredValue {
    std::shared_ptr<const ColoredSpace> space;
    Series series;
};

std::shared_ptr<const ColoredSpace> colored_space(const PolyMatrix& W);

// Legs (i, 0) of H become x_i; pairings come from -W^-1.
ColoredValue omega(const Gaussian& g);

// Built-in split unknots with framing +1 and -1.
const TangleProgram& unknot_program(int framing);

// Normalisation factor omega(Z(U+))^-s+ omega(Z(U-))^-s- as closed diagrams.
Series normalization(int sigma_plus, int sigma_minus, int N);
ColoredValue z_tilde(const Gaussian& g, int N);
ColoredValue z_tilde(const TangleProgram& p, int N);

// exp of sum_p rho_p(|H_1|) times the isolated vertex p, graded by i-degree.
Series augmentation(long h1_order, int N);
ColoredValue z_tilde_aug(const TangleProgram& p, int N);

// Sum over perfect matchings of legs; edges of the result read numerator / delta.
Series psi(const ColoredValue& v);
Series z_kricker(const TangleProgram& p, int N);

// Leg (i, e) goes to t^e images[i], then normalises in the target module.
ColoredValue transport(const ColoredValue& v, std::shared_ptr<const ColoredSpace> target,
                       const std::vector<ModuleElement>& images);
// Transport along W' = E W E*: x_i goes to column i of conj(E).
ColoredValue transport_by(const ColoredValue& v, const PolyMatrix& E, std::shared_ptr<const ColoredSpace> target);
// Disjoint union in the block-diagonal module, generators of b shifted after those of a.
ColoredValue disjoint_union(const ColoredValue& a, const ColoredValue& b);

// "equal" or "unresolved"; both values must live in modules presented by the same W.
std::string compare_values(const ColoredValue& a, const ColoredValue& b, ReducerBudget budget = {});

}  // namespace kricker
