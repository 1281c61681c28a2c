#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bakfem/manufactured.hpp"
#include "bakfem/problem.hpp"

using namespace bakfem;

namespace {

TwoParamBVP model(double e1, double e2) {
    return {e1,
            e2,
            ScalarField::constant(1.0),
            ScalarField::constant(1.0),
            ScalarField([](double x) { return std::cos(std::numbers::pi * x); }),
            1.0,
            1.0,
            1.0};
}

}  // namespace

TEST_CASE("constant-coefficient model problem validates") {
    const auto report = validate_problem(model(1e-8, 1e-4), 101);
    CHECK(report.ok);
    CHECK(report.violations.empty());
}

TEST_CASE("negative convection coefficient is rejected at x=0") {
    TwoParamBVP p = model(1e-8, 1e-4);
    p.b = ScalarField::constant(-1.0);
    const auto report = validate_problem(p, 101);
    REQUIRE_FALSE(report.ok);
    CHECK(report.violations.front().condition == "b(x) >= lambda > 0");
    CHECK(report.violations.front().x == 0.0);
}

TEST_CASE("the combined coefficient condition catches c - eps2*b'/2 <= 0") {
    // b = 1 + x, c = 0.3, eps2 = 1: b and c clear their lower bounds but
    // c - eps2*b'/2 = 0.3 - 0.5 < 0 everywhere.
    TwoParamBVP p{1e-2,
                  1.0,
                  ScalarField([](double x) { return 1.0 + x; }, [](double) { return 1.0; }),
                  ScalarField::constant(0.3),
                  ScalarField::constant(1.0),
                  0.5,
                  0.1,
                  0.1};
    const auto report = validate_problem(p, 101);
    REQUIRE_FALSE(report.ok);
    CHECK(report.violations.front().condition == "c(x) - eps2*b'(x)/2 >= gamma > 0");
    CHECK(report.violations.front().x == 0.0);
}

TEST_CASE("finite-difference fallback for b' matches the analytic derivative") {
    ScalarField no_deriv([](double x) { return x * x; });
    CHECK(no_deriv.derivative(0.5) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_FALSE(no_deriv.has_derivative());
}

TEST_CASE("non-finite coefficient evaluation raises an error") {
    TwoParamBVP p = model(1e-8, 1e-4);
    p.c = ScalarField([](double x) { return x < 0.5 ? 1.0 : 1.0 / 0.0; });
    CHECK_THROWS_AS(validate_problem(p, 11), EvaluationError);
}

TEST_CASE("layer decay rates for eps1=1e-8, eps2=1e-4") {
    const auto roots = characteristic_roots(model(1e-8, 1e-4));
    CHECK(roots.mu0 == doctest::Approx(6180.3399).epsilon(1e-6));
    CHECK(roots.mu1 == doctest::Approx(16180.3399).epsilon(1e-6));
}

TEST_CASE("layer decay rates for eps1=eps2=1 are the golden-ratio pair") {
    const auto roots = characteristic_roots(model(1.0, 1.0));
    CHECK(roots.mu0 == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-12));
    CHECK(roots.mu1 == doctest::Approx((std::sqrt(5.0) + 1.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("layer decay rates for eps1=1e-2, eps2=1") {
    const auto roots = characteristic_roots(model(1e-2, 1.0));
    CHECK(roots.mu0 == doctest::Approx(0.990195).epsilon(1e-5));
    CHECK(roots.mu1 == doctest::Approx(100.990195).epsilon(1e-5));
}

TEST_CASE("Vieta relations hold for constant coefficients") {
    for (double e1 : {1.0, 1e-4, 1e-8, 1e-10}) {
        for (double e2 : {1.0, 1e-4, 1e-8}) {
            const auto roots = characteristic_roots(model(e1, e2));
            CHECK(roots.mu0 * roots.mu1 * e1 == doctest::Approx(1.0).epsilon(1e-12));
            CHECK((roots.mu1 - roots.mu0) * e1 == doctest::Approx(e2).epsilon(1e-12));
            CHECK(roots.mu0 <= roots.mu1);
        }
    }
}

TEST_CASE("mu0 is cancellation-safe for tiny eps1") {
    for (double e1 : {1e-10, 1e-12, 1e-14}) {
        const double e2 = 1e-4;
        const auto roots = characteristic_roots(model(e1, e2));
        const long double s = sqrtl((long double)e2 * e2 + 4.0L * (long double)e1);
        const long double mu0_ld = (-(long double)e2 + s) / (2.0L * (long double)e1);
        CHECK(std::abs(roots.mu0 - (double)mu0_ld) / (double)mu0_ld < 1e-10);
    }
}

TEST_CASE("sampled extremization handles variable coefficients") {
    // b = 1 + x makes g1 grow with x, so its minimum sits at x=0;
    // g0 = -c/(eps1*g1) increases with x, putting its maximum at x=1.
    TwoParamBVP p{1e-4,
                  1e-2,
                  ScalarField([](double x) { return 1.0 + x; }, [](double) { return 1.0; }),
                  ScalarField::constant(1.0),
                  ScalarField::constant(1.0),
                  1.0,
                  1.0,
                  0.9};
    REQUIRE(validate_problem(p, 101).ok);
    const auto roots = characteristic_roots(p, 1025);
    CHECK(roots.mu0 <= roots.mu1);
    CHECK(roots.argmin_x1 == doctest::Approx(0.0).epsilon(1e-3));
    CHECK(roots.argmax_x0 == doctest::Approx(1.0).epsilon(1e-3));
    // Cross-check against the closed forms at the attaining endpoints.
    const double s1 = (1e-2 * 1.0 + std::sqrt(1e-4 * 1.0 + 4e-4)) / 2e-4;
    CHECK(roots.mu1 == doctest::Approx(s1).epsilon(1e-10));
}

TEST_CASE("eps2*mu0 stays below the reaction bound") {
    for (double e1 : {1.0, 1e-4, 1e-8}) {
        for (double e2 : {1.0, 1e-4}) {
            const auto p = model(e1, e2);
            const auto roots = characteristic_roots(p);
            CHECK(e2 * roots.mu0 <= 1.0 / p.lambda_lb * 1.0 + 1e-12);
        }
    }
}

TEST_CASE("closed-form solution: amplitude at eps1=eps2=1") {
    const auto ms = manufactured_solution(1.0, 1.0);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(ms.a == doctest::Approx((pi2 + 1.0) / (pi2 + (pi2 + 1.0) * (pi2 + 1.0)))
                      .epsilon(1e-14));
    CHECK(ms.a == doctest::Approx(0.08491).epsilon(1e-3));
}

TEST_CASE("closed-form solution vanishes at both endpoints") {
    for (double e1 : {1.0, 1e-6, 1e-10}) {
        for (double e2 : {1.0, 1e-4, 1e-8}) {
            const auto ms = manufactured_solution(e1, e2);
            CHECK(std::abs(ms.u(0.0)) < 1e-12);
            CHECK(std::abs(ms.u(1.0)) < 1e-12);
        }
    }
}

TEST_CASE("closed-form solution satisfies the ODE") {
    // -eps1*u'' + eps2*u' + u = cos(pi x); u'' from the parts analytically.
    for (double e1 : {1.0, 1e-4, 1e-8, 1e-10}) {
        for (double e2 : {1.0, 1e-4, 1e-8}) {
            const auto ms = manufactured_solution(e1, e2);
            const double pi = std::numbers::pi;
            for (int k = 0; k <= 100; ++k) {
                const double x = k / 100.0;
                const double S2 = -pi * pi * ms.S(x);
                const double E02 = ms.mu0 * ms.mu0 * ms.E0(x);
                const double E12 = ms.mu1 * ms.mu1 * ms.E1(x);
                const double resid =
                    -e1 * (S2 + E02 + E12) + e2 * ms.du(x) + ms.u(x) - std::cos(pi * x);
                // Cancellation scale: eps1*mu1^2 ~ 1/eps1, so the achievable
                // absolute accuracy is relative to the largest term.
                const double scale =
                    1.0 + e1 * (std::abs(S2) + std::abs(E02) + std::abs(E12));
                CHECK(std::abs(resid) < 1e-13 * scale + 1e-12);
            }
        }
    }
}

TEST_CASE("solution parts add up to the whole") {
    const auto ms = manufactured_solution(1e-8, 1e-4);
    for (int k = 0; k <= 50; ++k) {
        const double x = k / 50.0;
        const double sum = ms.S(x) + ms.E0(x) + ms.E1(x);
        CHECK(sum == doctest::Approx(ms.u(x)).epsilon(1e-14));
    }
}

TEST_CASE("exponential underflow clamps to zero") {
    CHECK(exp_clamped(-701.0) == 0.0);
    CHECK(exp_clamped(-700.0) == std::exp(-700.0));
    const auto ms = manufactured_solution(1e-10, 1e-8);
    CHECK(ms.E1(0.5) == 0.0);  // mu1 ~ 1e10, argument hugely negative
    CHECK(std::isfinite(ms.u(0.5)));
}
