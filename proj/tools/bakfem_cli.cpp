#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "bakfem/error_metrics.hpp"
#include "bakfem/fem.hpp"
#include "bakfem/interpolation.hpp"
#include "bakfem/manufactured.hpp"
#include "bakfem/mesh.hpp"
#include "bakfem/problem.hpp"
#include "bakfem/reference_tables.hpp"
#include "bakfem/study.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCheckMismatch = 2;
constexpr int kExitNumerical = 3;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw bakfem::ConfigError("cannot open output file: " + out_path);
    f << text;
}

bakfem::TwoParamBVP model_problem(double eps1, double eps2) {
    return bakfem::TwoParamBVP{
        eps1,
        eps2,
        bakfem::ScalarField::constant(1.0),
        bakfem::ScalarField::constant(1.0),
        bakfem::ScalarField([](double x) { return std::cos(std::numbers::pi * x); }),
        1.0,
        1.0,
        1.0};
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FEM convergence harness for a two-parameter reaction-convection-"
                 "diffusion problem on layer-adapted meshes"};
    app.require_subcommand(1);

    // solve -----------------------------------------------------------------
    double s_eps1 = 1e-8, s_eps2 = 1e-4, s_tau = 2.0, s_p = 0.5;
    int s_n = 64, s_qpoints = 5, s_qpanels = 1;
    std::string s_out;
    auto* solve = app.add_subcommand("solve", "solve one parameter combination and dump the solution");
    solve->add_option("--eps1", s_eps1, "diffusion parameter");
    solve->add_option("--eps2", s_eps2, "convection parameter");
    solve->add_option("--n", s_n, "number of mesh elements");
    solve->add_option("--tau", s_tau, "mesh grading exponent");
    solve->add_option("--p", s_p, "layer decay fraction");
    solve->add_option("--quad-points", s_qpoints, "Gauss points per panel (assembly)");
    solve->add_option("--quad-panels", s_qpanels, "panels per element (assembly)");
    solve->add_option("--out", s_out, "output path (default stdout)");

    // study -----------------------------------------------------------------
    std::vector<double> st_eps1{1e-8}, st_eps2{1e-4};
    std::vector<int> st_n{16, 32, 64, 128, 256};
    double st_tau = 2.0, st_p = 0.5;
    int st_qpoints = 5, st_qpanels = 1, st_jobs = 1;
    std::string st_format = "csv", st_out;
    auto* study = app.add_subcommand("study", "run a parameter sweep");
    study->add_option("--eps1", st_eps1, "eps1 values")->delimiter(',');
    study->add_option("--eps2", st_eps2, "eps2 values")->delimiter(',');
    study->add_option("--n", st_n, "mesh sizes")->delimiter(',');
    study->add_option("--tau", st_tau, "mesh grading exponent");
    study->add_option("--p", st_p, "layer decay fraction");
    study->add_option("--quad-points", st_qpoints, "Gauss points per panel (assembly)");
    study->add_option("--quad-panels", st_qpanels, "panels per element (assembly)");
    study->add_option("--format", st_format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
    study->add_option("--out", st_out, "output path (default stdout)");
    study->add_option("--jobs", st_jobs, "worker threads");

    // table -----------------------------------------------------------------
    int t_id = 3, t_jobs = 1;
    bool t_check = false;
    double t_tau = 2.5, t_p = 0.5;
    std::string t_format = "md", t_out;
    auto* tablecmd = app.add_subcommand("table", "regenerate one of the reference tables");
    tablecmd->add_option("--id", t_id, "table id 1..6")->required()->check(CLI::Range(1, 6));
    tablecmd->add_flag("--check", t_check, "compare against the embedded reference values");
    tablecmd->add_option("--tau", t_tau, "mesh grading exponent (default 2.5)");
    tablecmd->add_option("--p", t_p, "layer decay fraction");
    tablecmd->add_option("--format", t_format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
    tablecmd->add_option("--out", t_out, "output path (default stdout)");
    tablecmd->add_option("--jobs", t_jobs, "worker threads");

    // mesh-inspect ----------------------------------------------------------
    double m_eps1 = 1e-8, m_eps2 = 1e-4, m_tau = 2.0, m_p = 0.5;
    int m_n = 64;
    bool m_diag = false;
    std::string m_out;
    auto* meshcmd = app.add_subcommand("mesh-inspect", "dump a mesh and optional diagnostics");
    meshcmd->add_option("--eps1", m_eps1, "diffusion parameter");
    meshcmd->add_option("--eps2", m_eps2, "convection parameter");
    meshcmd->add_option("--n", m_n, "number of mesh elements");
    meshcmd->add_option("--tau", m_tau, "mesh grading exponent");
    meshcmd->add_option("--p", m_p, "layer decay fraction");
    meshcmd->add_flag("--diag", m_diag, "append a size/grading diagnostic report");
    meshcmd->add_option("--out", m_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*solve) {
            const auto problem = model_problem(s_eps1, s_eps2);
            const auto vr = bakfem::validate_problem(problem, 101);
            if (!vr.ok) {
                std::cerr << "invalid problem: " << vr.violations.front().condition << "\n";
                return kExitConfig;
            }
            const auto roots = bakfem::characteristic_roots(problem);
            const auto ms = bakfem::manufactured_solution(s_eps1, s_eps2);
            const auto mesh = bakfem::build_mesh(roots.mu0, roots.mu1, {s_n, s_tau, s_p});
            const auto sys = bakfem::assemble(problem, mesh, {s_qpoints, s_qpanels});
            const auto sol = bakfem::solve_tridiagonal(sys, mesh);
            const auto interp = bakfem::pi_interpolate(ms, mesh);
            const double e_super =
                bakfem::energy_norm_discrete_diff(interp.u_I, sol.u, s_eps1);
            const auto cont = bakfem::energy_error_continuous(
                [&](double x) { return ms.u(x); }, [&](double x) { return ms.du(x); },
                s_eps1, sol.u);

            std::string out = bakfem::dump_mesh(mesh, &sol.u.values);
            out += "# residual " + fmt17(sol.residual) + "\n";
            out += "# e_energy " + fmt17(cont.e_energy) + "\n";
            out += "# e_superclose " + fmt17(e_super) + "\n";
            out += "# e_l2 " + fmt17(cont.e_l2) + "\n";
            out += "# e_h1w " + fmt17(cont.e_h1w) + "\n";
            out += "# pe1_energy " + fmt17(interp.pe1_energy) + "\n";
            out += "# quad_delta " + fmt17(cont.quad_delta) + "\n";
            write_output(out, s_out);
            return kExitOk;
        }

        if (*study) {
            bakfem::StudyConfig cfg;
            cfg.eps1_list = st_eps1;
            cfg.eps2_list = st_eps2;
            cfg.n_list = st_n;
            cfg.tau = st_tau;
            cfg.p = st_p;
            cfg.quad = {st_qpoints, st_qpanels};
            cfg.jobs = st_jobs;
            cfg.output_format =
                st_format == "md" ? bakfem::OutputFormat::md : bakfem::OutputFormat::csv;
            const auto table = bakfem::run_study(cfg);
            std::string out;
            if (cfg.output_format == bakfem::OutputFormat::csv) {
                out = bakfem::to_csv(table);
            } else {
                out = "Energy error ||u - u^N||_E\n\n" + bakfem::to_markdown(table, false) +
                      "\nSupercloseness ||u^I - u^N||_E\n\n" +
                      bakfem::to_markdown(table, true);
            }
            write_output(out, st_out);
            return kExitOk;
        }

        if (*tablecmd) {
            bakfem::StudyConfig cfg = bakfem::replication_config(t_id);
            cfg.tau = t_tau;
            cfg.p = t_p;
            cfg.jobs = t_jobs;
            const auto table = bakfem::run_study(cfg);
            const bool superclose = bakfem::reference_table(t_id).superclose;
            std::string out = t_format == "csv" ? bakfem::to_csv(table)
                                                : bakfem::to_markdown(table, superclose);
            write_output(out, t_out);
            if (t_check) {
                const auto report = bakfem::check_against_reference(table, t_id);
                int checked = 0, failed = 0;
                for (const auto& v : report.cells) {
                    if (v.value_checked || v.rate_checked) ++checked;
                    if (!v.pass()) {
                        ++failed;
                        std::cerr << "MISMATCH eps1=" << v.eps1 << " N=" << v.N << ": "
                                  << v.detail << "\n";
                    }
                }
                std::cerr << "check: " << checked << " cells checked, " << failed
                          << " mismatches\n";
                if (!report.pass) return kExitCheckMismatch;
            }
            return kExitOk;
        }

        if (*meshcmd) {
            const auto problem = model_problem(m_eps1, m_eps2);
            const auto roots = bakfem::characteristic_roots(problem);
            const auto mesh = bakfem::build_mesh(roots.mu0, roots.mu1, {m_n, m_tau, m_p});
            std::string out = bakfem::dump_mesh(mesh);
            if (m_diag) {
                const auto diag = bakfem::mesh_diagnostics(mesh);
                out += "# diagnostics: all_brackets_pass=" +
                       std::string(diag.all_brackets_pass ? "yes" : "no") + "\n";
                if (!diag.notice.empty()) out += "# " + diag.notice + "\n";
                for (const auto* side : {&diag.left, &diag.right}) {
                    if (!side->graded) continue;
                    const char* name = side == &diag.left ? "left" : "right";
                    out += std::string("# ") + name +
                           ": monotone=" + (side->monotone ? "yes" : "no") +
                           " scaled_max_m32=" + fmt17(side->scaled_max_m32) +
                           " scaled_max_m52=" + fmt17(side->scaled_max_m52) +
                           " t_max=" + fmt17(side->t_max) +
                           " t_argmax=" + std::to_string(side->t_argmax) +
                           " endpoint=" + (side->t_max_at_endpoint ? "yes" : "no") + "\n";
                    for (const auto& b : side->brackets) {
                        out += "#   " + b.name + ": " + fmt17(b.lower) + " <= " +
                               fmt17(b.value) + " <= " + fmt17(b.upper) + " : " +
                               (b.pass ? "ok" : "FAIL") + "\n";
                    }
                }
            }
            write_output(out, m_out);
            return kExitOk;
        }
    } catch (const bakfem::ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& ex) {
        std::cerr << "numerical failure: " << ex.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
