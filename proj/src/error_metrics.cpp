#include "bakfem/error_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace bakfem {

namespace {

// L2^2 and H1-seminorm^2 of g - v for a fixed panel count.
void integrate_parts(const std::function<double(double)>& g,
                     const std::function<double(double)>& dg, const PiecewiseLinear& v,
                     int points, int panels, double& l2_sq, double& h1_sq) {
    const BakhvalovMesh& mesh = *v.mesh;
    const GaussRule& rule = gauss_rule(points);
    l2_sq = 0.0;
    h1_sq = 0.0;
    for (int k = 0; k < mesh.N(); ++k) {
        const double xl = mesh.nodes[k];
        const double hk = mesh.h(k);
        const double slope = v.slope(k);
        for (int pp = 0; pp < panels; ++pp) {
            const double a0 = xl + hk * pp / panels;
            const double b0 = xl + hk * (pp + 1) / panels;
            const double mid = 0.5 * (a0 + b0);
            const double hw = 0.5 * (b0 - a0);
            for (int q = 0; q < points; ++q) {
                const double xq = mid + hw * rule.nodes[q];
                const double w = hw * rule.weights[q];
                const double d0 = g(xq) - (v.values[k] + slope * (xq - xl));
                const double d1 = dg(xq) - slope;
                if (!std::isfinite(d0) || !std::isfinite(d1)) {
                    throw EvaluationError("energy_error_continuous: non-finite integrand in element " +
                                          std::to_string(k));
                }
                l2_sq += w * d0 * d0;
                h1_sq += w * d1 * d1;
            }
        }
    }
}

}  // namespace

ContinuousError energy_error_continuous(const std::function<double(double)>& g,
                                        const std::function<double(double)>& dg,
                                        double eps1, const PiecewiseLinear& v,
                                        const QuadratureRule& quad) {
    constexpr double kDeltaTarget = 1e-3;
    constexpr int kMaxPanels = 32;

    int panels = quad.panels_per_element;
    double l2_sq, h1_sq;
    integrate_parts(g, dg, v, quad.points, panels, l2_sq, h1_sq);
    double energy = std::sqrt(l2_sq + eps1 * h1_sq);

    double delta;
    for (;;) {
        double l2f, h1f;
        integrate_parts(g, dg, v, quad.points, 2 * panels, l2f, h1f);
        const double fine = std::sqrt(l2f + eps1 * h1f);
        delta = std::abs(fine - energy) / std::max(fine, 1e-300);
        // Keep the finer evaluation either way.
        panels *= 2;
        l2_sq = l2f;
        h1_sq = h1f;
        energy = fine;
        if (delta <= kDeltaTarget || panels >= kMaxPanels) break;
    }

    ContinuousError err;
    err.e_energy = energy;
    err.e_l2 = std::sqrt(l2_sq);
    err.e_h1w = std::sqrt(eps1 * h1_sq);
    err.h1_semi = std::sqrt(h1_sq);
    err.quad_delta = delta;
    err.panels_used = panels;
    err.reliable = delta <= kDeltaTarget;
    return err;
}

double energy_norm_discrete_diff(const PiecewiseLinear& v, const PiecewiseLinear& w,
                                 double eps1) {
    if (v.mesh != w.mesh) {
        throw std::invalid_argument("energy_norm_discrete_diff: operands live on different meshes");
    }
    const BakhvalovMesh& mesh = *v.mesh;
    double l2_sq = 0.0, h1_sq = 0.0;
    for (int k = 0; k < mesh.N(); ++k) {
        const double hk = mesh.h(k);
        const double dl = v.values[k] - w.values[k];
        const double dr = v.values[k + 1] - w.values[k + 1];
        const double dm = 0.5 * (dl + dr);
        // Simpson is exact for the square of a linear function.
        l2_sq += hk / 6.0 * (dl * dl + 4.0 * dm * dm + dr * dr);
        const double slope = (dr - dl) / hk;
        h1_sq += hk * slope * slope;
    }
    return std::sqrt(l2_sq + eps1 * h1_sq);
}

double convergence_rate(double e_N, double e_2N) {
    if (!(e_N > 0.0) || !(e_2N > 0.0)) {
        throw std::domain_error("convergence_rate: errors must be positive");
    }
    return std::log2(e_N / e_2N);
}

}  // namespace bakfem
