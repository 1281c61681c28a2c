#include "bakfem/manufactured.hpp"

#include <numbers>
#include <stdexcept>

namespace bakfem {

namespace {
constexpr double kPi = std::numbers::pi;
}

double ManufacturedSolution::S(double x) const {
    return a * std::cos(kPi * x) + b_coef * std::sin(kPi * x);
}

double ManufacturedSolution::dS(double x) const {
    return -a * kPi * std::sin(kPi * x) + b_coef * kPi * std::cos(kPi * x);
}

double ManufacturedSolution::E0(double x) const { return A * exp_clamped(-mu0 * x); }

double ManufacturedSolution::dE0(double x) const { return -mu0 * A * exp_clamped(-mu0 * x); }

double ManufacturedSolution::E1(double x) const { return B * exp_clamped(-mu1 * (1.0 - x)); }

double ManufacturedSolution::dE1(double x) const {
    return mu1 * B * exp_clamped(-mu1 * (1.0 - x));
}

ManufacturedSolution manufactured_solution(double eps1, double eps2) {
    if (!(eps1 > 0.0) || !(eps2 > 0.0)) {
        throw std::invalid_argument("manufactured_solution: eps1, eps2 must be > 0");
    }
    ManufacturedSolution ms;
    ms.eps1 = eps1;
    ms.eps2 = eps2;

    const double s = std::sqrt(eps2 * eps2 + 4.0 * eps1);
    ms.mu0 = 2.0 / (eps2 + s);             // = (-eps2 + s)/(2 eps1) without cancellation
    ms.mu1 = (eps2 + s) / (2.0 * eps1);

    const double pi2 = kPi * kPi;
    const double denom = eps2 * eps2 * pi2 + (eps1 * pi2 + 1.0) * (eps1 * pi2 + 1.0);
    ms.a = (eps1 * pi2 + 1.0) / denom;
    ms.b_coef = eps2 * kPi / denom;

    const double em0 = exp_clamped(-ms.mu0);
    const double em1 = exp_clamped(-ms.mu1);
    const double em01 = exp_clamped(-ms.mu0 - ms.mu1);
    ms.A = -ms.a * (1.0 + em1) / (1.0 - em01);
    ms.B = ms.a * (1.0 + em0) / (1.0 - em01);
    return ms;
}

}  // namespace bakfem
