#pragma once

#include <vector>

namespace bakfem {

/// Gauss-Legendre nodes/weights on [-1,1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule with n points (n >= 1); exact for polynomials of degree 2n-1.
const GaussRule& gauss_rule(int n);

/// Composite rule used per mesh element: `points`-point Gauss on each of
/// `panels_per_element` equal panels.
struct QuadratureRule {
    int points = 5;
    int panels_per_element = 1;
};

}  // namespace bakfem
