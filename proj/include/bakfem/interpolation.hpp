#pragma once

#include <functional>

#include "bakfem/fem.hpp"
#include "bakfem/manufactured.hpp"

namespace bakfem {

/// Nodal interpolant: values[i] = g(nodes[i]).
PiecewiseLinear lagrange_interpolate(const std::function<double(double)>& g,
                                     const BakhvalovMesh& mesh);

/// u_I is the plain nodal interpolant. pi_u modifies it by dropping the
/// single hat contribution of the x=1 layer at node 3N/4+1:
/// pi_u = u_I everywhere except that node, where pi_u = u_I - pe1_node_value.
struct InterpolantBundle {
    PiecewiseLinear u_I;
    PiecewiseLinear pi_u;
    double pe1_node_value = 0.0;  // E1 at node 3N/4+1
    double pe1_energy = 0.0;      // exact energy norm of the dropped hat
    bool pe1_applied = false;     // false on meshes without a graded right layer
};

InterpolantBundle pi_interpolate(const ManufacturedSolution& ms, const BakhvalovMesh& mesh);

}  // namespace bakfem
