#pragma once

#include <cmath>

namespace bakfem {

/// exp with underflow clamp: arguments below -700 give exactly 0.
inline double exp_clamped(double t) {
    return t < -700.0 ? 0.0 : std::exp(t);
}

/// Closed-form solution of -eps1*u'' + eps2*u' + u = cos(pi*x), u(0)=u(1)=0:
///   u = a*cos(pi x) + b_coef*sin(pi x) + A*exp(-mu0 x) + B*exp(-mu1 (1-x)),
/// split into a smooth part S and boundary-layer parts E0 (at x=0) and E1 (at x=1).
struct ManufacturedSolution {
    double eps1;
    double eps2;
    double a;
    double b_coef;
    double A;
    double B;
    double mu0;
    double mu1;

    double S(double x) const;
    double dS(double x) const;
    double E0(double x) const;
    double dE0(double x) const;
    double E1(double x) const;
    double dE1(double x) const;
    double u(double x) const { return S(x) + E0(x) + E1(x); }
    double du(double x) const { return dS(x) + dE0(x) + dE1(x); }
};

ManufacturedSolution manufactured_solution(double eps1, double eps2);

}  // namespace bakfem
