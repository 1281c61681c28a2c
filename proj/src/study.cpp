#include "bakfem/study.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <thread>
#include <tuple>

#include "bakfem/error_metrics.hpp"
#include "bakfem/fem.hpp"
#include "bakfem/interpolation.hpp"
#include "bakfem/manufactured.hpp"
#include "bakfem/mesh.hpp"
#include "bakfem/problem.hpp"
#include "bakfem/reference_tables.hpp"

namespace bakfem {

namespace {

TwoParamBVP model_problem(double eps1, double eps2) {
    return TwoParamBVP{eps1,
                       eps2,
                       ScalarField::constant(1.0),
                       ScalarField::constant(1.0),
                       ScalarField([](double x) { return std::cos(std::numbers::pi * x); }),
                       1.0,
                       1.0,
                       1.0};
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

CellResult compute_cell(double eps1, double eps2, int N, const StudyConfig& cfg) {
    CellResult cell;
    cell.eps1 = eps1;
    cell.eps2 = eps2;
    cell.N = N;
    cell.tau = cfg.tau;
    cell.p = cfg.p;
    try {
        const TwoParamBVP problem = model_problem(eps1, eps2);
        const ValidationReport vr = validate_problem(problem, 101);
        if (!vr.ok) {
            cell.error = "validation failed: " + vr.violations.front().condition;
            return cell;
        }
        const CharacteristicRoots roots = characteristic_roots(problem);
        cell.mu0 = roots.mu0;
        cell.mu1 = roots.mu1;

        const ManufacturedSolution ms = manufactured_solution(eps1, eps2);
        const BakhvalovMesh mesh = build_mesh(roots.mu0, roots.mu1, {N, cfg.tau, cfg.p});
        cell.left_mode = to_string(mesh.left_mode);
        cell.right_mode = to_string(mesh.right_mode);

        const TridiagonalSystem sys = assemble(problem, mesh, cfg.quad);
        const FemSolution sol = solve_tridiagonal(sys, mesh);

        const InterpolantBundle interp = pi_interpolate(ms, mesh);
        cell.pe1_energy = interp.pe1_energy;
        cell.e_superclose = energy_norm_discrete_diff(interp.u_I, sol.u, eps1);

        const ContinuousError cont = energy_error_continuous(
            [&](double x) { return ms.u(x); }, [&](double x) { return ms.du(x); }, eps1,
            sol.u, cfg.error_quad);
        cell.e_energy = cont.e_energy;
        cell.e_l2 = cont.e_l2;
        cell.e_h1w = cont.e_h1w;
        cell.quad_delta = cont.quad_delta;
        cell.ln_factor = std::sqrt(eps2) / (static_cast<double>(N) * N) *
                         std::sqrt(std::log(static_cast<double>(N)));
    } catch (const std::exception& ex) {
        cell.error = ex.what();
    }
    return cell;
}

}  // namespace

StudyConfig replication_config(int table_id) {
    const ReferenceTable& ref = reference_table(table_id);
    StudyConfig cfg;
    cfg.eps1_list.assign(ref.eps1_cols.begin(), ref.eps1_cols.end());
    cfg.eps2_list = {ref.eps2};
    cfg.n_list.assign(ref.n_rows.begin(), ref.n_rows.end());
    cfg.tau = 2.5;
    cfg.p = 0.5;
    cfg.quad = {1, 1};  // midpoint assembly quadrature reproduces the published values
    return cfg;
}

ConvergenceTable run_study(const StudyConfig& cfg) {
    if (cfg.eps1_list.empty() || cfg.eps2_list.empty() || cfg.n_list.empty()) {
        throw ConfigError("run_study: eps1, eps2 and N lists must be nonempty");
    }
    for (int N : cfg.n_list) {
        check_mesh_params({N, cfg.tau, cfg.p});
    }
    for (std::size_t i = 1; i < cfg.n_list.size(); ++i) {
        if (cfg.n_list[i] <= cfg.n_list[i - 1]) {
            throw ConfigError("run_study: n_list must be strictly increasing");
        }
    }
    if (cfg.jobs < 1) {
        throw ConfigError("run_study: jobs must be >= 1");
    }

    // Sorted cell list; each worker writes only its own slots, so the merge is
    // deterministic regardless of the worker count.
    std::vector<std::tuple<double, double, int>> keys;
    auto eps1s = cfg.eps1_list;
    auto eps2s = cfg.eps2_list;
    std::sort(eps1s.begin(), eps1s.end());
    std::sort(eps2s.begin(), eps2s.end());
    for (double e1 : eps1s)
        for (double e2 : eps2s)
            for (int N : cfg.n_list) keys.emplace_back(e1, e2, N);

    ConvergenceTable table;
    table.rows.resize(keys.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= keys.size()) break;
            const auto& [e1, e2, N] = keys[i];
            table.rows[i] = compute_cell(e1, e2, N, cfg);
        }
    };
    if (cfg.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Rates within each (eps1, eps2) column across doubling N.
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
        CellResult& cur = table.rows[i];
        const CellResult& nxt = table.rows[i + 1];
        if (cur.eps1 == nxt.eps1 && cur.eps2 == nxt.eps2 && nxt.N == 2 * cur.N &&
            cur.error.empty() && nxt.error.empty()) {
            if (cur.e_energy > 0.0 && nxt.e_energy > 0.0) {
                cur.p_energy = convergence_rate(cur.e_energy, nxt.e_energy);
            }
            if (cur.e_superclose > 0.0 && nxt.e_superclose > 0.0) {
                cur.p_superclose = convergence_rate(cur.e_superclose, nxt.e_superclose);
            }
        }
    }
    return table;
}

std::string to_csv(const ConvergenceTable& table) {
    std::string out =
        "eps1,eps2,N,tau,p,mu0,mu1,left_mode,right_mode,e_energy,p_energy,"
        "e_superclose,p_superclose,e_l2,e_h1w,pe1_energy,quad_delta\n";
    for (const CellResult& c : table.rows) {
        out += fmt17(c.eps1) + ',' + fmt17(c.eps2) + ',' + std::to_string(c.N) + ',' +
               fmt17(c.tau) + ',' + fmt17(c.p) + ',' + fmt17(c.mu0) + ',' + fmt17(c.mu1) +
               ',' + c.left_mode + ',' + c.right_mode + ',' + fmt17(c.e_energy) + ',' +
               (c.p_energy ? fmt17(*c.p_energy) : "") + ',' + fmt17(c.e_superclose) + ',' +
               (c.p_superclose ? fmt17(*c.p_superclose) : "") + ',' + fmt17(c.e_l2) + ',' +
               fmt17(c.e_h1w) + ',' + fmt17(c.pe1_energy) + ',' + fmt17(c.quad_delta) + '\n';
    }
    return out;
}

std::string to_markdown(const ConvergenceTable& table, bool superclose) {
    // One column pair (error, rate) per eps1, rows indexed by N, like the
    // published layout. Assumes a single eps2 in the table.
    std::vector<double> eps1s;
    std::vector<int> ns;
    for (const CellResult& c : table.rows) {
        if (std::find(eps1s.begin(), eps1s.end(), c.eps1) == eps1s.end())
            eps1s.push_back(c.eps1);
        if (std::find(ns.begin(), ns.end(), c.N) == ns.end()) ns.push_back(c.N);
    }
    std::sort(eps1s.begin(), eps1s.end(), std::greater<>());
    std::sort(ns.begin(), ns.end());

    std::map<std::pair<double, int>, const CellResult*> by_key;
    for (const CellResult& c : table.rows) by_key[{c.eps1, c.N}] = &c;

    const char* e_head = superclose ? "e_I" : "e";
    const char* p_head = superclose ? "p_I" : "p";
    std::string out = "| N |";
    std::string sep = "|---|";
    for (double e1 : eps1s) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), " %s (eps1=%g) | %s |", e_head, e1, p_head);
        out += buf;
        sep += "---|---|";
    }
    out += '\n' + sep + '\n';
    for (int N : ns) {
        out += "| " + std::to_string(N) + " |";
        for (double e1 : eps1s) {
            const CellResult* c = by_key.count({e1, N}) ? by_key[{e1, N}] : nullptr;
            if (!c || !c->error.empty()) {
                out += " n/a | n/a |";
                continue;
            }
            const double e = superclose ? c->e_superclose : c->e_energy;
            const auto& r = superclose ? c->p_superclose : c->p_energy;
            out += " " + format_table_value(e) + " | ";
            if (r) {
                char rb[32];
                std::snprintf(rb, sizeof(rb), "%.2f", *r);
                out += rb;
            } else {
                out += "---";
            }
            out += " |";
        }
        out += '\n';
    }
    return out;
}

CheckReport check_against_reference(const ConvergenceTable& table, int reference_id) {
    const ReferenceTable& ref = reference_table(reference_id);

    auto find_cell = [&](double e1, double e2, int N) -> const CellResult* {
        for (const CellResult& c : table.rows) {
            if (c.N == N && std::abs(c.eps1 - e1) <= 1e-12 * e1 &&
                std::abs(c.eps2 - e2) <= 1e-12 * e2) {
                return &c;
            }
        }
        return nullptr;
    };

    CheckReport report;
    for (std::size_t col = 0; col < ref.eps1_cols.size(); ++col) {
        const double e1 = ref.eps1_cols[col];
        for (std::size_t row = 0; row < ref.n_rows.size(); ++row) {
            const int N = ref.n_rows[row];
            const CellResult* cell = find_cell(e1, ref.eps2, N);
            if (!cell) {
                throw ConfigError("check_against_reference: table does not cover the grid");
            }
            CellVerdict v;
            v.eps1 = e1;
            v.eps2 = ref.eps2;
            v.N = N;
            v.value_checked = v.value_ok = v.rate_checked = v.rate_ok = false;
            if (!cell->error.empty()) {
                v.fallback = false;
                v.value_checked = true;
                v.detail = "cell failed: " + cell->error;
                report.cells.push_back(v);
                report.pass = false;
                continue;
            }
            v.fallback = cell->left_mode != "graded" || cell->right_mode != "graded";

            const double computed = ref.superclose ? cell->e_superclose : cell->e_energy;
            const auto& computed_rate =
                ref.superclose ? cell->p_superclose : cell->p_energy;
            const ReferenceCell& printed = ref.cells[row][col];
            const std::string printed_rate_s = printed.rate;
            const bool has_printed_rate = printed_rate_s != "---";

            // A rate spans cells at N and 2N; comparing it with the published
            // value only makes sense when the grading regime is settled, i.e.
            // the cells at N/2 (if present), N and 2N share the same modes.
            bool regime_settled = false;
            if (has_printed_rate && computed_rate) {
                const CellResult* twice = find_cell(e1, ref.eps2, 2 * N);
                const CellResult* half = row > 0 ? find_cell(e1, ref.eps2, N / 2) : nullptr;
                auto same_modes = [&](const CellResult* o) {
                    return o && o->error.empty() && o->left_mode == cell->left_mode &&
                           o->right_mode == cell->right_mode;
                };
                regime_settled = same_modes(twice) && (row == 0 || same_modes(half));
            }

            if (!v.fallback) {
                v.value_checked = true;
                const double target = parse_table_value(printed.value);
                v.value_ok = format_table_value(computed) == printed.value ||
                             std::abs(computed - target) <= 0.05 * target;
                if (!v.value_ok) {
                    v.detail += "value " + fmt17(computed) + " vs printed " + printed.value + "; ";
                }
                if (regime_settled) {
                    const double printed_rate = parse_table_value(printed_rate_s);
                    // Transient superclose rates are printed mid-decay; allow
                    // the wider window there.
                    const double tol =
                        (ref.superclose && printed_rate <= 1.95) ? 0.10 : 0.05;
                    v.rate_checked = true;
                    v.rate_ok = std::abs(*computed_rate - printed_rate) <= tol;
                    if (!v.rate_ok) {
                        v.detail += "rate " + fmt17(*computed_rate) + " vs printed " +
                                    printed_rate_s + " (tol " + fmt17(tol) + "); ";
                    }
                }
            } else if (regime_settled) {
                if (!ref.superclose) {
                    v.rate_checked = true;
                    v.rate_ok = std::abs(*computed_rate - 1.0) <= 0.10;
                    if (!v.rate_ok) {
                        v.detail += "fallback energy rate " + fmt17(*computed_rate) +
                                    " outside 1.00+-0.10; ";
                    }
                } else {
                    const double printed_rate = parse_table_value(printed_rate_s);
                    if (printed_rate >= 1.85 && printed_rate <= 2.15) {
                        v.rate_checked = true;
                        v.rate_ok = std::abs(*computed_rate - 2.0) <= 0.15;
                        if (!v.rate_ok) {
                            v.detail += "fallback superclose rate " + fmt17(*computed_rate) +
                                        " outside 2.00+-0.15; ";
                        }
                    }
                }
            }
            if (!v.pass()) report.pass = false;
            report.cells.push_back(v);
        }
    }
    return report;
}

}  // namespace bakfem
