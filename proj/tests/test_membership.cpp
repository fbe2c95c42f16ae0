#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hqdisk/cantor.hpp"
#include "hqdisk/membership.hpp"

using namespace hqdisk;

namespace {

QuadratureConfig quick_cfg(int nodes = 2048) {
    QuadratureConfig cfg;
    cfg.nodes = nodes;
    return cfg;
}

PVConfig quick_pv(int nodes = 2048) {
    PVConfig pv;
    pv.nodes = nodes;
    return pv;
}

} // namespace

TEST_CASE("identity lift is a member with vanishing hilbert sup") {
    const auto rep = check_membership(identity_lift(), quick_cfg(), quick_pv());
    CHECK(rep.verdict == Verdict::member);
    CHECK(rep.strictly_increasing);
    CHECK(rep.bilipschitz_upper == Catch::Approx(1.0).margin(1e-12));
    CHECK(rep.bilipschitz_lower == Catch::Approx(1.0).margin(1e-12));
    CHECK(std::abs(rep.total_increase - two_pi) <= 1e-12);
    CHECK(rep.hilbert_sup_estimate <= 1e-12);
    CHECK_FALSE(rep.derivative_numerical);
}

TEST_CASE("example3 fails on the flat segment") {
    const auto rep = check_membership(example3_lift(), quick_cfg(), quick_pv());
    CHECK(rep.verdict == Verdict::non_member);
    CHECK_FALSE(rep.strictly_increasing);
    CHECK(rep.bilipschitz_lower <= 1e-15);
    CHECK(rep.reason.find("flat") != std::string::npos);
}

TEST_CASE("cantor limit lift fails the bi-Lipschitz criterion") {
    const auto rep = check_membership(phi_cantor(), quick_cfg(4096), quick_pv());
    CHECK(rep.verdict == Verdict::non_member);
    // the lower quotient bound actually holds (slope >= 1/2 from the linear
    // term); the failure is the upper estimate escaping under refinement
    CHECK(rep.bilipschitz_lower == Catch::Approx(0.5).margin(1e-3));
    CHECK(rep.upper_growth > 0.10);
    CHECK(rep.reason.find("bi-Lipschitz") != std::string::npos);
    CHECK(rep.derivative_numerical);
}

TEST_CASE("the approximating sequence consists of members") {
    for (int n : {0, 2, 4, 6}) {
        const auto rep = check_membership(phi_n(n), quick_cfg(4096), quick_pv());
        INFO("n = " << n << " reason: " << rep.reason);
        CHECK(rep.verdict == Verdict::member);
        CHECK(rep.bilipschitz_lower >= 0.5 - 1e-9);
        CHECK(std::isfinite(rep.hilbert_sup_estimate));
        CHECK(rep.upper_growth <= 0.10);
    }
}

TEST_CASE("mobius traces and combinations are members") {
    const auto m = mobius_trace_lift({0.2, -0.3});
    CHECK(check_membership(m, quick_cfg(), quick_pv()).verdict == Verdict::member);
    const auto combo = convex_combination(m, phi_n(2), 0.4);
    CHECK(check_membership(combo, quick_cfg(), quick_pv()).verdict == Verdict::member);
}

TEST_CASE("numerical differentiation path") {
    SECTION("smooth lift without a closed-form derivative is still a member") {
        LiftFunction lift{
            [](double t) { return t + 0.3 * std::sin(t); },
            {},
            {}};
        const auto rep = check_membership(lift, quick_cfg(), quick_pv());
        CHECK(rep.derivative_numerical);
        CHECK(rep.verdict == Verdict::member);
    }
    SECTION("sub-quotient-scale oscillation is reported inconclusive") {
        // amplitude tuned so mesh quotients stay clean (the wave vanishes on
        // the quotient grids) while difference quotients at the derivative
        // step disagree under halving
        const double freq = 8192.0; // = 4 * nodes
        const double amp = 0.9 / freq;
        LiftFunction lift{
            [=](double t) { return t + amp * std::sin(freq * t); },
            {},
            {}};
        const auto rep = check_membership(lift, quick_cfg(2048), quick_pv(1024));
        INFO("reason: " << rep.reason << " growth: " << rep.upper_growth);
        CHECK(rep.verdict == Verdict::inconclusive);
        CHECK(rep.reason.find("noisy") != std::string::npos);
    }
}

TEST_CASE("total increase violations are caught") {
    LiftFunction bad{
        [](double t) { return 1.5 * t; },
        [](double) { return 1.5; },
        {}};
    const auto rep = check_membership(bad, quick_cfg(), quick_pv());
    CHECK(rep.verdict == Verdict::non_member);
    CHECK(rep.reason.find("total increase") != std::string::npos);
}
