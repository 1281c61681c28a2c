#include "bakfem/fem.hpp"

#include <cmath>
#include <limits>

namespace bakfem {

TridiagonalSystem assemble(const TwoParamBVP& problem, const BakhvalovMesh& mesh,
                           const QuadratureRule& quad) {
    const int N = mesh.N();
    const int n = N - 1;  // interior unknowns
    const GaussRule& rule = gauss_rule(quad.points);
    const int panels = quad.panels_per_element;

    TridiagonalSystem sys;
    sys.sub.assign(n, 0.0);
    sys.diag.assign(n, 0.0);
    sys.super.assign(n, 0.0);
    sys.rhs.assign(n, 0.0);

    for (int k = 0; k < N; ++k) {
        const double xl = mesh.nodes[k];
        const double xr = mesh.nodes[k + 1];
        const double hk = xr - xl;
        const double d[2] = {-1.0 / hk, 1.0 / hk};  // hat slopes on this element

        // K[i][j] = a(theta_j, theta_i) restricted to the element.
        double K[2][2];
        double F[2] = {0.0, 0.0};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) K[i][j] = problem.eps1 * d[j] * d[i] * hk;

        for (int pp = 0; pp < panels; ++pp) {
            const double a0 = xl + hk * pp / panels;
            const double b0 = xl + hk * (pp + 1) / panels;
            const double mid = 0.5 * (a0 + b0);
            const double hw = 0.5 * (b0 - a0);
            for (int g = 0; g < quad.points; ++g) {
                const double xq = mid + hw * rule.nodes[g];
                const double w = hw * rule.weights[g];
                const double th[2] = {(xr - xq) / hk, (xq - xl) / hk};
                const double bx = problem.b(xq);
                const double cx = problem.c(xq);
                const double fx = problem.f(xq);
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        K[i][j] += w * (problem.eps2 * bx * d[j] * th[i] + cx * th[j] * th[i]);
                    }
                    F[i] += w * fx * th[i];
                }
            }
        }

        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                if (!std::isfinite(K[i][j]) || !std::isfinite(F[i])) {
                    throw EvaluationError("assemble: non-finite value in element " +
                                          std::to_string(k));
                }
            }
        }

        // Local node 0 is global node k (unknown k-1), local 1 is k+1 (unknown k).
        const int gi[2] = {k - 1, k};
        for (int i = 0; i < 2; ++i) {
            if (gi[i] < 0 || gi[i] >= n) continue;
            for (int j = 0; j < 2; ++j) {
                if (gi[j] < 0 || gi[j] >= n) continue;
                if (gi[j] == gi[i])
                    sys.diag[gi[i]] += K[i][j];
                else if (gi[j] == gi[i] - 1)
                    sys.sub[gi[i]] += K[i][j];
                else
                    sys.super[gi[i]] += K[i][j];
            }
            sys.rhs[gi[i]] += F[i];
        }
    }
    return sys;
}

double scaled_residual(const TridiagonalSystem& sys, const std::vector<double>& interior) {
    const int n = static_cast<int>(sys.size());
    double umax = 0.0;
    for (double v : interior) umax = std::max(umax, std::abs(v));
    const double uscale = std::max(1.0, umax);

    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double ax = sys.diag[i] * interior[i];
        double row1 = std::abs(sys.diag[i]);
        if (i > 0) {
            ax += sys.sub[i] * interior[i - 1];
            row1 += std::abs(sys.sub[i]);
        }
        if (i < n - 1) {
            ax += sys.super[i] * interior[i + 1];
            row1 += std::abs(sys.super[i]);
        }
        const double scale = row1 * uscale + std::abs(sys.rhs[i]);
        if (scale > 0.0) {
            worst = std::max(worst, std::abs(ax - sys.rhs[i]) / scale);
        }
    }
    return worst;
}

FemSolution solve_tridiagonal(const TridiagonalSystem& sys, const BakhvalovMesh& mesh) {
    const int n = static_cast<int>(sys.size());
    if (n != mesh.N() - 1) {
        throw std::invalid_argument("solve_tridiagonal: system size does not match mesh");
    }

    // Thomas algorithm, forward sweep then back substitution.
    std::vector<double> cp(n), dp(n);
    if (std::abs(sys.diag[0]) < std::numeric_limits<double>::min()) {
        throw SolverError("solve_tridiagonal: zero pivot at row 0");
    }
    cp[0] = sys.super[0] / sys.diag[0];
    dp[0] = sys.rhs[0] / sys.diag[0];
    for (int i = 1; i < n; ++i) {
        const double m = sys.diag[i] - sys.sub[i] * cp[i - 1];
        if (std::abs(m) < std::numeric_limits<double>::min() || !std::isfinite(m)) {
            throw SolverError("solve_tridiagonal: zero pivot at row " + std::to_string(i));
        }
        cp[i] = sys.super[i] / m;
        dp[i] = (sys.rhs[i] - sys.sub[i] * dp[i - 1]) / m;
    }
    std::vector<double> interior(n);
    interior[n - 1] = dp[n - 1];
    for (int i = n - 2; i >= 0; --i) {
        interior[i] = dp[i] - cp[i] * interior[i + 1];
    }

    FemSolution sol;
    sol.u.mesh = &mesh;
    sol.u.values.assign(mesh.N() + 1, 0.0);
    for (int i = 0; i < n; ++i) sol.u.values[i + 1] = interior[i];
    sol.residual = scaled_residual(sys, interior);
    return sol;
}

double galerkin_residual(const TwoParamBVP& problem, const BakhvalovMesh& mesh,
                         const QuadratureRule& quad, const PiecewiseLinear& u_h) {
    const TridiagonalSystem sys = assemble(problem, mesh, quad);
    std::vector<double> interior(u_h.values.begin() + 1, u_h.values.end() - 1);
    return scaled_residual(sys, interior);
}

}  // namespace bakfem
