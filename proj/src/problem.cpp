#include "bakfem/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bakfem {

ValidationReport validate_problem(const TwoParamBVP& p, int n_samples) {
    if (n_samples < 2) {
        throw std::invalid_argument("validate_problem: n_samples must be >= 2");
    }
    ValidationReport report;
    auto fail = [&](const std::string& cond, double x, double value) {
        report.ok = false;
        report.violations.push_back({cond, x, value});
    };

    if (!(p.eps1 > 0.0 && p.eps1 <= 1.0)) fail("0 < eps1 <= 1", 0.0, p.eps1);
    if (!(p.eps2 > 0.0 && p.eps2 <= 1.0)) fail("0 < eps2 <= 1", 0.0, p.eps2);

    for (int k = 0; k < n_samples; ++k) {
        const double x = static_cast<double>(k) / (n_samples - 1);
        const double bx = p.b(x);
        const double cx = p.c(x);
        p.f(x);  // finiteness check only
        if (!(bx >= p.lambda_lb) || !(p.lambda_lb > 0.0)) {
            fail("b(x) >= lambda > 0", x, bx);
            break;
        }
        if (!(cx >= p.beta_lb) || !(p.beta_lb > 0.0)) {
            fail("c(x) >= beta > 0", x, cx);
            break;
        }
        const double g = cx - 0.5 * p.eps2 * p.b.derivative(x);
        if (!(g >= p.gamma_lb) || !(p.gamma_lb > 0.0)) {
            fail("c(x) - eps2*b'(x)/2 >= gamma > 0", x, g);
            break;
        }
    }
    return report;
}

namespace {

struct Roots {
    double g0;  // negative root
    double g1;  // positive root
};

// Cancellation-safe roots of -eps1*g^2 + eps2*b*g + c = 0: the large root by
// the stable branch of the quadratic formula, the other via Vieta.
Roots roots_at(double eps1, double eps2, double bx, double cx) {
    const double disc = eps2 * eps2 * bx * bx + 4.0 * eps1 * cx;
    if (!(disc > 0.0)) {
        throw std::runtime_error("characteristic_roots: non-positive discriminant");
    }
    const double g1 = (eps2 * bx + std::sqrt(disc)) / (2.0 * eps1);
    const double g0 = -cx / (eps1 * g1);  // g0*g1 = -c/eps1
    return {g0, g1};
}

// Golden-section minimization of fn over [a, b].
template <typename F>
double golden_min(F fn, double a, double b) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    for (int it = 0; it < 80 && (b - a) > 1e-14; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = fn(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = fn(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

CharacteristicRoots characteristic_roots(const TwoParamBVP& p, int n_samples) {
    if (n_samples < 2) {
        throw std::invalid_argument("characteristic_roots: n_samples must be >= 2");
    }

    if (p.b.is_constant() && p.c.is_constant()) {
        const Roots r = roots_at(p.eps1, p.eps2, p.b.constant_value(), p.c.constant_value());
        return {-r.g0, r.g1, 0.0, 0.0};
    }

    auto g0_at = [&](double x) { return roots_at(p.eps1, p.eps2, p.b(x), p.c(x)).g0; };
    auto g1_at = [&](double x) { return roots_at(p.eps1, p.eps2, p.b(x), p.c(x)).g1; };

    double best0_x = 0.0, best0 = g0_at(0.0);
    double best1_x = 0.0, best1 = g1_at(0.0);
    for (int k = 1; k < n_samples; ++k) {
        const double x = static_cast<double>(k) / (n_samples - 1);
        const double v0 = g0_at(x);
        const double v1 = g1_at(x);
        if (v0 > best0) { best0 = v0; best0_x = x; }
        if (v1 < best1) { best1 = v1; best1_x = x; }
    }

    // One golden-section refinement in the bracket around the best sample.
    const double step = 1.0 / (n_samples - 1);
    {
        const double a = std::max(0.0, best0_x - step);
        const double b = std::min(1.0, best0_x + step);
        const double x = golden_min([&](double t) { return -g0_at(t); }, a, b);
        if (g0_at(x) > best0) { best0 = g0_at(x); best0_x = x; }
    }
    {
        const double a = std::max(0.0, best1_x - step);
        const double b = std::min(1.0, best1_x + step);
        const double x = golden_min(g1_at, a, b);
        if (g1_at(x) < best1) { best1 = g1_at(x); best1_x = x; }
    }

    return {-best0, best1, best0_x, best1_x};
}

}  // namespace bakfem
