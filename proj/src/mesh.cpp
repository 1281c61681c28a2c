#include "bakfem/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bakfem {

void check_mesh_params(const MeshParams& params) {
    if (params.N < 16 || params.N % 4 != 0) {
        throw std::invalid_argument("mesh: N must be >= 16 and divisible by 4");
    }
    if (!(params.tau >= 1.0)) {
        throw std::invalid_argument("mesh: tau must be >= 1");
    }
    if (!(params.p > 0.0 && params.p < 1.0)) {
        throw std::invalid_argument("mesh: p must lie in (0,1)");
    }
}

TransitionPoints transition_points(double mu0, double mu1, const MeshParams& params) {
    check_mesh_params(params);
    if (!(mu0 > 0.0 && mu1 > 0.0)) {
        throw std::invalid_argument("transition_points: mu0, mu1 must be > 0");
    }
    TransitionPoints tp;
    tp.sigma0 = params.tau / (params.p * mu0) * std::log(mu0);
    tp.sigma1 = params.tau / (params.p * mu1) * std::log(mu1);
    tp.left_valid = mu0 >= params.N && tp.sigma0 > 0.0 && tp.sigma0 <= 0.25;
    tp.right_valid = mu1 >= params.N && tp.sigma1 > 0.0 && tp.sigma1 <= 0.25;
    // Invalid sides fall back to a uniform quarter.
    if (!tp.left_valid) tp.sigma0 = 0.25;
    if (!tp.right_valid) tp.sigma1 = 0.25;
    return tp;
}

BakhvalovMesh build_mesh(double mu0, double mu1, const MeshParams& params) {
    const TransitionPoints tp = transition_points(mu0, mu1, params);
    const int N = params.N;
    const int q = N / 4;

    BakhvalovMesh mesh;
    mesh.params = params;
    mesh.sigma0 = tp.sigma0;
    mesh.sigma1 = tp.sigma1;
    mesh.mu0 = mu0;
    mesh.mu1 = mu1;
    mesh.left_mode = tp.left_valid ? GradingMode::graded : GradingMode::uniform_fallback;
    mesh.right_mode = tp.right_valid ? GradingMode::graded : GradingMode::uniform_fallback;
    mesh.nodes.assign(N + 1, 0.0);

    auto t = [N](int i) { return static_cast<double>(i) / N; };

    if (tp.left_valid) {
        // x_i = tau/(p mu0) * phi0(t_i), phi0(t) = -ln(1 - 4(1 - 1/mu0) t)
        const double scale = params.tau / (params.p * mu0);
        const double xi = 4.0 * (1.0 - 1.0 / mu0);
        for (int i = 0; i <= q; ++i) {
            mesh.nodes[i] = scale * (-std::log1p(-xi * t(i)));
        }
    } else {
        for (int i = 0; i <= q; ++i) {
            mesh.nodes[i] = t(i);  // uniform on [0, 1/4]
        }
    }

    for (int i = q; i <= 3 * q; ++i) {
        mesh.nodes[i] = tp.sigma0 + 2.0 * (t(i) - 0.25) * (1.0 - tp.sigma0 - tp.sigma1);
    }

    if (tp.right_valid) {
        const double scale = params.tau / (params.p * mu1);
        const double xi = 4.0 * (1.0 - 1.0 / mu1);
        for (int i = 3 * q; i <= N; ++i) {
            mesh.nodes[i] = 1.0 - scale * (-std::log1p(-xi * (1.0 - t(i))));
        }
    } else {
        for (int i = 3 * q; i <= N; ++i) {
            mesh.nodes[i] = t(i);
        }
    }

    mesh.nodes[0] = 0.0;
    mesh.nodes[N] = 1.0;

    for (int i = 0; i < N; ++i) {
        if (!(mesh.nodes[i + 1] > mesh.nodes[i])) {
            throw std::runtime_error("build_mesh: non-monotone node sequence at i=" +
                                     std::to_string(i));
        }
    }
    return mesh;
}

namespace {

BracketCheck bracket(const std::string& name, double lower, double value, double upper) {
    return {name, lower, value, upper, lower <= value && value <= upper};
}

}  // namespace

MeshDiagnostics mesh_diagnostics(const BakhvalovMesh& mesh) {
    const int N = mesh.N();
    const int q = N / 4;
    const double tau = mesh.params.tau;
    const double p = mesh.params.p;

    MeshDiagnostics diag;

    if (mesh.left_mode == GradingMode::graded) {
        LayerDiagnostics& L = diag.left;
        L.graded = true;
        L.monotone = true;
        for (int i = 0; i + 1 <= q - 2; ++i) {
            if (mesh.h(i) > mesh.h(i + 1)) L.monotone = false;
        }
        L.brackets.push_back(bracket("h_{N/4-2}", tau / (4.0 * p) / mesh.mu0,
                                     mesh.h(q - 2), tau / p / mesh.mu0));
        L.brackets.push_back(bracket("h_{N/4-1}", tau / (2.0 * p) / mesh.mu0,
                                     mesh.h(q - 1), 4.0 * tau / p / N));
        for (int m2 = 3; m2 <= 5; m2 += 2) {  // m = 3/2 and 5/2
            const double m = m2 / 2.0;
            double worst = 0.0;
            for (int i = 0; i <= q - 2; ++i) {
                const double v = std::pow(mesh.mu0 * N * mesh.h(i), m) *
                                 std::exp(-p * mesh.mu0 * mesh.nodes[i]);
                worst = std::max(worst, v);
            }
            (m2 == 3 ? L.scaled_max_m32 : L.scaled_max_m52) = worst;
        }
        for (int i = 0; i <= q - 3; ++i) {
            L.t_values.push_back((mesh.h(i + 1) - mesh.h(i)) *
                                 std::exp(-p * mesh.mu0 * mesh.nodes[i + 1]));
        }
    } else {
        diag.notice += "left side uniform-fallback: layer diagnostics skipped. ";
    }

    if (mesh.right_mode == GradingMode::graded) {
        LayerDiagnostics& R = diag.right;
        R.graded = true;
        R.monotone = true;
        for (int i = 3 * q + 1; i + 1 <= N - 1; ++i) {
            if (mesh.h(i) < mesh.h(i + 1)) R.monotone = false;
        }
        R.brackets.push_back(bracket("h_{3N/4}", tau / (2.0 * p) / mesh.mu1,
                                     mesh.h(3 * q), 4.0 * tau / p / N));
        R.brackets.push_back(bracket("h_{3N/4+1}", tau / (4.0 * p) / mesh.mu1,
                                     mesh.h(3 * q + 1), tau / p / mesh.mu1));
        for (int m2 = 3; m2 <= 5; m2 += 2) {
            const double m = m2 / 2.0;
            double worst = 0.0;
            for (int i = 3 * q + 1; i <= N - 1; ++i) {
                const double v = std::pow(mesh.mu1 * N * mesh.h(i), m) *
                                 std::exp(-p * mesh.mu1 * (1.0 - mesh.nodes[i + 1]));
                worst = std::max(worst, v);
            }
            (m2 == 3 ? R.scaled_max_m32 : R.scaled_max_m52) = worst;
        }
        // Mirror of the left-layer T_i: sizes shrink toward x=1.
        for (int i = 3 * q + 1; i <= N - 2; ++i) {
            R.t_values.push_back((mesh.h(i) - mesh.h(i + 1)) *
                                 std::exp(-p * mesh.mu1 * (1.0 - mesh.nodes[i + 1])));
        }
    } else {
        diag.notice += "right side uniform-fallback: layer diagnostics skipped. ";
    }

    for (LayerDiagnostics* L : {&diag.left, &diag.right}) {
        if (!L->graded || L->t_values.empty()) continue;
        L->t_max = L->t_values[0];
        L->t_argmax = 0;
        for (int i = 1; i < static_cast<int>(L->t_values.size()); ++i) {
            if (L->t_values[i] > L->t_max) {
                L->t_max = L->t_values[i];
                L->t_argmax = i;
            }
        }
        L->t_max_at_endpoint =
            L->t_argmax == 0 || L->t_argmax == static_cast<int>(L->t_values.size()) - 1;
    }

    // The central size bound only applies when both layers are graded.
    if (diag.left.graded && diag.right.graded) {
        for (int i = q; i <= 3 * q - 1; ++i) {
            diag.central.push_back(bracket("h_central", 1.0 / N, mesh.h(i), 2.0 / N));
        }
    }

    for (const auto* list : {&diag.left.brackets, &diag.right.brackets, &diag.central}) {
        for (const auto& b : *list) {
            if (!b.pass) diag.all_brackets_pass = false;
        }
    }
    if (diag.left.graded && !diag.left.monotone) diag.all_brackets_pass = false;
    if (diag.right.graded && !diag.right.monotone) diag.all_brackets_pass = false;
    return diag;
}

std::string dump_mesh(const BakhvalovMesh& mesh, const std::vector<double>* solution) {
    char buf[256];
    std::string out;
    // Header: "# N tau p mu0 mu1 sigma0 sigma1 left_mode right_mode"
    std::snprintf(buf, sizeof(buf), "# %d %.17g %.17g %.17g %.17g %.17g %.17g %s %s\n",
                  mesh.N(), mesh.params.tau, mesh.params.p, mesh.mu0, mesh.mu1, mesh.sigma0,
                  mesh.sigma1, to_string(mesh.left_mode), to_string(mesh.right_mode));
    out += buf;
    for (int i = 0; i <= mesh.N(); ++i) {
        if (i < mesh.N()) {
            std::snprintf(buf, sizeof(buf), "%d\t%.17g\t%.17g", i, mesh.nodes[i], mesh.h(i));
        } else {
            std::snprintf(buf, sizeof(buf), "%d\t%.17g\t", i, mesh.nodes[i]);
        }
        out += buf;
        if (solution) {
            std::snprintf(buf, sizeof(buf), "\t%.17g", (*solution)[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace bakfem
