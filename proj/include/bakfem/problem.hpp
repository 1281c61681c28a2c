#pragma once

#include <string>
#include <vector>

#include "bakfem/scalar_field.hpp"

namespace bakfem {

/// -eps1*u'' + eps2*b(x)*u' + c(x)*u = f(x) on (0,1), u(0)=u(1)=0,
/// with b >= lambda_lb > 0, c >= beta_lb > 0 and c - eps2*b'/2 >= gamma_lb > 0.
struct TwoParamBVP {
    double eps1;
    double eps2;
    ScalarField b;
    ScalarField c;
    ScalarField f;
    double lambda_lb = 1.0;
    double beta_lb = 1.0;
    double gamma_lb = 1.0;
};

struct Violation {
    std::string condition;  // which inequality failed
    double x;               // sample location
    double value;           // offending value
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;  // first entry is the first failure found
};

/// Extremal roots of -eps1*g^2 + eps2*b(x)*g + c(x) = 0 over [0,1]:
/// mu0 = -max_x g0(x), mu1 = min_x g1(x).
struct CharacteristicRoots {
    double mu0;
    double mu1;
    double argmax_x0;  // where g0 attains its max
    double argmin_x1;  // where g1 attains its min
};

/// Checks 0 < eps <= 1 and the three coefficient inequalities on the
/// uniform grid x_k = k/(n_samples-1).
ValidationReport validate_problem(const TwoParamBVP& p, int n_samples);

CharacteristicRoots characteristic_roots(const TwoParamBVP& p, int n_samples = 1025);

}  // namespace bakfem
