#pragma once

#include <string>
#include <vector>

namespace bakfem {

struct MeshParams {
    int N;
    double tau = 2.0;
    double p = 0.5;
};

/// Throws std::invalid_argument unless N >= 16, N % 4 == 0, tau >= 1, 0 < p < 1.
void check_mesh_params(const MeshParams& params);

enum class GradingMode { graded, uniform_fallback };

inline const char* to_string(GradingMode m) {
    return m == GradingMode::graded ? "graded" : "uniform-fallback";
}

struct TransitionPoints {
    double sigma0;
    double sigma1;
    bool left_valid;
    bool right_valid;
};

/// sigma_j = tau/(p*mu_j) * ln(mu_j); side j is valid iff mu_j >= N and
/// 0 < sigma_j <= 1/4. Invalid sides carry sigma_j = 1/4 (uniform quarter).
TransitionPoints transition_points(double mu0, double mu1, const MeshParams& params);

/// Four-piece layer-adapted mesh: log-graded quarters of N/4 elements at each
/// boundary (when valid), equidistant N/2 elements in between.
struct BakhvalovMesh {
    MeshParams params;
    std::vector<double> nodes;  // N+1 entries, nodes[0]=0, nodes[N]=1
    double sigma0;
    double sigma1;
    double mu0;
    double mu1;
    GradingMode left_mode;
    GradingMode right_mode;

    int N() const { return params.N; }
    double h(int i) const { return nodes[i + 1] - nodes[i]; }  // element i = [x_i, x_{i+1}]
};

BakhvalovMesh build_mesh(double mu0, double mu1, const MeshParams& params);

struct BracketCheck {
    std::string name;
    double lower;
    double value;
    double upper;
    bool pass;
};

/// Diagnostics for one graded layer region.
struct LayerDiagnostics {
    bool graded = false;
    bool monotone = false;                // element sizes grow away from the boundary
    std::vector<BracketCheck> brackets;   // size brackets with the tau/p constants
    double scaled_max_m32 = 0.0;          // max_i (mu N h_i)^{3/2} e^{-p mu d_i}
    double scaled_max_m52 = 0.0;          // same with exponent 5/2
    std::vector<double> t_values;         // T_i = (size difference) * layer weight
    double t_max = 0.0;
    int t_argmax = -1;                    // index into t_values
    bool t_max_at_endpoint = false;
};

struct MeshDiagnostics {
    LayerDiagnostics left;
    LayerDiagnostics right;
    std::vector<BracketCheck> central;  // N^-1 <= h <= 2N^-1 (both sides graded only)
    bool all_brackets_pass = true;
    std::string notice;  // mentions skipped fallback sides
};

MeshDiagnostics mesh_diagnostics(const BakhvalovMesh& mesh);

/// Plain-text dump: header "# N tau p mu0 mu1 sigma0 sigma1 left_mode right_mode"
/// then one "i<TAB>x_i<TAB>h_i" line per node (h_N empty), 17 significant digits.
std::string dump_mesh(const BakhvalovMesh& mesh, const std::vector<double>* solution = nullptr);

}  // namespace bakfem
