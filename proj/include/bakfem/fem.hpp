#pragma once

#include <vector>

#include "bakfem/mesh.hpp"
#include "bakfem/problem.hpp"
#include "bakfem/quadrature.hpp"

namespace bakfem {

/// Nodal values over a mesh; members of the FEM space have zero boundary values.
struct PiecewiseLinear {
    const BakhvalovMesh* mesh = nullptr;
    std::vector<double> values;  // N+1 entries

    double slope(int element) const {
        return (values[element + 1] - values[element]) / mesh->h(element);
    }
};

/// Interior unknowns 1..N-1; boundary rows eliminated.
struct TridiagonalSystem {
    std::vector<double> sub;   // sub[i] couples unknown i to i-1 (sub[0] unused)
    std::vector<double> diag;
    std::vector<double> super; // super[i] couples unknown i to i+1 (last unused)
    std::vector<double> rhs;

    std::size_t size() const { return diag.size(); }
};

/// Galerkin system for a(u,v) = eps1(u',v') + eps2(b u', v) + (c u, v) = (f, v)
/// with hat basis functions. Diffusion entries are exact; convection, reaction
/// and the load use the given quadrature.
TridiagonalSystem assemble(const TwoParamBVP& problem, const BakhvalovMesh& mesh,
                           const QuadratureRule& quad);

struct FemSolution {
    PiecewiseLinear u;
    double residual;  // scaled residual recomputed after the solve
};

/// Thomas algorithm, no pivoting. Throws SolverError on a zero pivot.
FemSolution solve_tridiagonal(const TridiagonalSystem& sys, const BakhvalovMesh& mesh);

class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// max_i |a(u_h, theta_i) - (f, theta_i)| scaled per row by
/// ||row_i||_1 * max(1, ||u_h||_inf) + |rhs_i|.  <= 1e-10 certifies
/// orthogonality of the discrete solution at machine level.
double galerkin_residual(const TwoParamBVP& problem, const BakhvalovMesh& mesh,
                         const QuadratureRule& quad, const PiecewiseLinear& u_h);

/// Same per-row scaled residual for an already-assembled system.
double scaled_residual(const TridiagonalSystem& sys, const std::vector<double>& interior);

}  // namespace bakfem
