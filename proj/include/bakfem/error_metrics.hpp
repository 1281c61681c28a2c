#pragma once

#include <functional>

#include "bakfem/fem.hpp"
#include "bakfem/quadrature.hpp"

namespace bakfem {

/// ||g - v||-type norms where g is smooth and v piecewise linear, computed by
/// composite Gauss quadrature per element. Panels double (up to 32 per
/// element) until the relative change of the energy value is <= 1e-3.
struct ContinuousError {
    double e_energy;     // sqrt(l2^2 + eps1*h1_semi^2)
    double e_l2;         // ||g - v||
    double e_h1w;        // sqrt(eps1)*|g - v|_1
    double h1_semi;      // unweighted seminorm |g - v|_1
    double quad_delta;   // relative change at the final panel doubling
    int panels_used;
    bool reliable;       // quad_delta <= 1e-3 reached within the panel cap
};

ContinuousError energy_error_continuous(const std::function<double(double)>& g,
                                        const std::function<double(double)>& dg,
                                        double eps1, const PiecewiseLinear& v,
                                        const QuadratureRule& quad = {5, 4});

/// Exact energy norm of v - w (both piecewise linear on the same mesh):
/// Simpson per element for the L2 part, constant slopes for the seminorm.
double energy_norm_discrete_diff(const PiecewiseLinear& v, const PiecewiseLinear& w,
                                 double eps1);

/// log2(e_N / e_2N); throws std::domain_error unless both are > 0.
double convergence_rate(double e_N, double e_2N);

}  // namespace bakfem
