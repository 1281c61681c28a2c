#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bakfem/reference_tables.hpp"
#include "bakfem/study.hpp"

using namespace bakfem;

TEST_CASE("table-format round trips") {
    CHECK(format_table_value(0.0089) == "0.89E-2");
    CHECK(format_table_value(0.0124) == "0.12E-1");
    CHECK(format_table_value(0.0995) == "0.10E0");  // carry into the next decade
    CHECK(parse_table_value("0.89E-2") == doctest::Approx(0.0089).epsilon(1e-14));
    CHECK(parse_table_value("0.12E-1") == doctest::Approx(0.012).epsilon(1e-14));
    CHECK_THROWS_AS(parse_table_value("abc"), std::invalid_argument);
    CHECK_THROWS_AS(format_table_value(0.0), std::invalid_argument);
}

TEST_CASE("reference table lookup") {
    CHECK(reference_table(1).eps2 == 1.0);
    CHECK_FALSE(reference_table(1).superclose);
    CHECK(reference_table(4).superclose);
    CHECK(reference_table(6).eps2 == 1e-8);
    CHECK_THROWS_AS(reference_table(0), std::out_of_range);
    CHECK_THROWS_AS(reference_table(7), std::out_of_range);
    // spot values
    CHECK(std::string(reference_table(3).cells[0][4].value) == "0.89E-2");
    CHECK(std::string(reference_table(3).cells[0][4].rate) == "1.66");
    CHECK(std::string(reference_table(3).cells[8][4].rate) == "---");
}

TEST_CASE("empty sweep configuration is rejected") {
    StudyConfig cfg;
    cfg.eps1_list = {1e-8};
    cfg.eps2_list = {1e-4};
    cfg.n_list = {};
    CHECK_THROWS_AS(run_study(cfg), ConfigError);
    cfg.n_list = {32, 16};
    CHECK_THROWS_AS(run_study(cfg), ConfigError);
    cfg.n_list = {16, 32};
    cfg.jobs = 0;
    CHECK_THROWS_AS(run_study(cfg), ConfigError);
}

TEST_CASE("single-cell sweep matches the published strong-layer cell") {
    StudyConfig cfg;
    cfg.eps1_list = {1e-8};
    cfg.eps2_list = {1e-4};
    cfg.n_list = {16};
    cfg.tau = 2.5;
    cfg.quad = {1, 1};
    const auto table = run_study(cfg);
    REQUIRE(table.rows.size() == 1);
    const auto& c = table.rows[0];
    CHECK(c.error.empty());
    CHECK(c.e_energy == doctest::Approx(0.89e-2).epsilon(0.05));
    CHECK(c.e_superclose == doctest::Approx(0.14e-1).epsilon(0.05));
    CHECK(c.left_mode == "graded");
    CHECK(c.right_mode == "graded");
    CHECK_FALSE(c.p_energy.has_value());  // no doubling partner
    CHECK(c.quad_delta <= 1e-3);
}

TEST_CASE("the published grid yields a 54-row table with sentinel last rates") {
    StudyConfig cfg = replication_config(1);
    cfg.n_list = {16, 32, 64, 128, 256, 512, 1024, 2048, 4096};
    const auto table = run_study(cfg);
    CHECK(table.rows.size() == 54);
    for (const auto& c : table.rows) {
        CHECK(c.error.empty());
        if (c.N == 4096) {
            CHECK_FALSE(c.p_energy.has_value());
            CHECK_FALSE(c.p_superclose.has_value());
        } else {
            CHECK(c.p_energy.has_value());
            CHECK(c.p_superclose.has_value());
        }
    }
    const std::string csv = to_csv(table);
    CHECK(csv.rfind("eps1,eps2,N,tau,p,mu0,mu1,left_mode,right_mode,e_energy,p_energy,"
                    "e_superclose,p_superclose,e_l2,e_h1w,pe1_energy,quad_delta\n",
                    0) == 0);
    // header + 54 rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 55);
}

TEST_CASE("reruns produce byte-identical CSV") {
    StudyConfig cfg;
    cfg.eps1_list = {1e-8, 1e-10};
    cfg.eps2_list = {1e-4};
    cfg.n_list = {16, 32, 64};
    cfg.tau = 2.5;
    cfg.quad = {1, 1};
    const auto a = to_csv(run_study(cfg));
    const auto b = to_csv(run_study(cfg));
    CHECK(a == b);
}

TEST_CASE("worker count does not change the CSV bytes") {
    StudyConfig cfg;
    cfg.eps1_list = {1e-6, 1e-8};
    cfg.eps2_list = {1e-4};
    cfg.n_list = {16, 32, 64, 128};
    cfg.tau = 2.5;
    cfg.quad = {1, 1};
    cfg.jobs = 1;
    const auto serial = to_csv(run_study(cfg));
    cfg.jobs = 4;
    const auto parallel = to_csv(run_study(cfg));
    CHECK(serial == parallel);
}

TEST_CASE("checking a matching sweep against its reference passes") {
    StudyConfig cfg = replication_config(3);
    const auto table = run_study(cfg);
    const auto report = check_against_reference(table, 3);
    for (const auto& v : report.cells) {
        INFO("eps1=", v.eps1, " N=", v.N, " detail=", v.detail);
        CHECK(v.pass());
    }
    CHECK(report.pass);
    CHECK(report.cells.size() == 54);
}

TEST_CASE("check requires full grid coverage") {
    StudyConfig cfg = replication_config(3);
    cfg.eps1_list = {1e-8};  // only one column
    const auto table = run_study(cfg);
    CHECK_THROWS_AS(check_against_reference(table, 3), ConfigError);
}

TEST_CASE("supercloseness outpaces the energy rate in the strong-layer column") {
    StudyConfig cfg;
    cfg.eps1_list = {1e-10};
    cfg.eps2_list = {1e-4};
    cfg.n_list = {512, 1024, 2048, 4096};
    cfg.tau = 2.5;
    cfg.quad = {1, 1};
    const auto table = run_study(cfg);
    int compared = 0;
    for (const auto& c : table.rows) {
        if (c.p_energy && c.p_superclose) {
            CHECK(*c.p_superclose - *c.p_energy >= 0.8);
            ++compared;
        }
    }
    CHECK(compared == 3);
}

TEST_CASE("markdown output carries one error/rate pair per eps1") {
    StudyConfig cfg;
    cfg.eps1_list = {1e-8, 1e-10};
    cfg.eps2_list = {1e-4};
    cfg.n_list = {16, 32};
    cfg.tau = 2.5;
    cfg.quad = {1, 1};
    const auto md = to_markdown(run_study(cfg), false);
    CHECK(md.find("| N |") == 0);
    CHECK(md.find("eps1=1e-08") != std::string::npos);
    CHECK(md.find("---") != std::string::npos);  // sentinel for the last row
}
