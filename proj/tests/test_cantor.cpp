#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "hqdisk/cantor.hpp"

using namespace hqdisk;
using std::numbers::pi;

namespace {

double mesh_sup_diff(const CantorApproximant& f, const CantorApproximant& g, int mesh) {
    double sup = 0.0;
    for (int i = 0; i <= mesh; ++i) {
        const double x = static_cast<double>(i) / mesh;
        sup = std::max(sup, std::abs(f(x) - g(x)));
    }
    return sup;
}

CantorApproximant psi(int n) {
    return cantor_iterate([](double x) { return smoothstep(x); }, n,
                          [](double x) { return smoothstep_prime(x); });
}

} // namespace

TEST_CASE("cantor oracle point values") {
    CHECK(cantor_oracle(0.0) == 0.0);
    CHECK(cantor_oracle(1.0) == 1.0);
    CHECK(cantor_oracle(0.5) == 0.5);
    CHECK(cantor_oracle(0.25) == Catch::Approx(1.0 / 3.0).margin(1e-15));
    CHECK(cantor_oracle(1.0 / 3.0) == Catch::Approx(0.5).margin(1e-15));
    // constant on the removed middle third
    CHECK(cantor_oracle(0.4) == 0.5);
    CHECK(cantor_oracle(0.6) == 0.5);
    CHECK_THROWS_AS(cantor_oracle(-0.1), std::domain_error);
    CHECK_THROWS_AS(cantor_oracle(1.1), std::domain_error);
}

TEST_CASE("iteration converges to the oracle") {
    const auto p40 = psi(40);
    std::mt19937 gen(3);
    auto u01 = [&] { return static_cast<double>(gen() >> 8) * 0x1.0p-24; };
    for (int i = 0; i < 200; ++i) {
        const double x = u01();
        CHECK(std::abs(p40(x) - cantor_oracle(x)) <= 1e-12);
    }
    // contraction bound at n = 15 pinned against the oracle value 1/3
    const auto p15 = psi(15);
    CHECK(std::abs(p15(0.25) - 1.0 / 3.0) <= std::pow(2.0, -15) + 1e-12);
}

TEST_CASE("recursion structure") {
    SECTION("n = 0 returns the seed") {
        const auto p0 = psi(0);
        for (double x : {0.0, 0.2, 0.5, 0.9, 1.0}) CHECK(p0(x) == smoothstep(x));
    }
    SECTION("middle branch") {
        const auto p1 = psi(1);
        CHECK(p1(0.5) == 0.5);
        CHECK(p1(0.4) == 0.5);
    }
    SECTION("branch consistency is exact") {
        std::mt19937 gen(5);
        auto u01 = [&] { return static_cast<double>(gen() >> 8) * 0x1.0p-24; };
        for (int n : {1, 3, 6}) {
            const auto pn = psi(n);
            const auto pn1 = psi(n + 1);
            for (int i = 0; i < 50; ++i) {
                const double xl = u01() / 3.0;
                CHECK(pn1(xl) == 0.5 * pn(3.0 * xl));
                const double xr = 2.0 / 3.0 + u01() / 3.0;
                CHECK(pn1(xr) == 0.5 + 0.5 * pn(3.0 * xr - 2.0));
            }
        }
    }
    SECTION("self-map, monotone") {
        for (int n : {1, 4, 9}) {
            const auto pn = psi(n);
            CHECK(pn(0.0) == 0.0);
            CHECK(pn(1.0) == 1.0);
            double prev = 0.0;
            for (int i = 1; i <= 512; ++i) {
                const double v = pn(static_cast<double>(i) / 512.0);
                CHECK(v >= prev - 1e-15);
                prev = v;
            }
        }
    }
}

TEST_CASE("uniform contraction of successive iterates") {
    double prev_gap = mesh_sup_diff(psi(1), psi(0), 2048);
    for (int n = 1; n <= 8; ++n) {
        const double gap = mesh_sup_diff(psi(n + 1), psi(n), 2048);
        CHECK(gap <= 0.5 * prev_gap + 1e-12);
        prev_gap = gap;
    }
}

TEST_CASE("mesh distance to the oracle halves per step") {
    const int mesh = 4096;
    std::vector<double> d;
    for (int n = 1; n <= 11; ++n) {
        const auto pn = psi(n);
        double sup = 0.0;
        for (int i = 0; i <= mesh; ++i) {
            const double x = static_cast<double>(i) / mesh;
            sup = std::max(sup, std::abs(pn(x) - cantor_oracle(x)));
        }
        d.push_back(sup);
    }
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        const double ratio = d[i + 1] / d[i];
        CHECK(ratio >= 0.4);
        CHECK(ratio <= 0.6);
    }
}

TEST_CASE("phi_n lifts") {
    for (int n : {0, 1, 4}) {
        const auto lift = phi_n(n);
        CHECK(lift.eval(0.0) == 0.0);
        CHECK(std::abs(lift.eval(two_pi) - two_pi) <= 1e-15);
        const auto est = estimate_bilipschitz(lift, 2048);
        CHECK(est.lower >= 0.5 - 1e-9); // additive t/2pi term forces slope >= 1/2
    }
    CHECK(phi_n(0).eval(pi) == Catch::Approx(pi).margin(1e-12));

    // n = 0 must agree with the direct smoothstep transfer
    const auto a = phi_n(0);
    const auto b = smoothstep_lift();
    for (int i = 0; i <= 64; ++i) {
        const double t = two_pi * i / 64.0;
        CHECK(a.eval(t) == Catch::Approx(b.eval(t)).margin(1e-15));
    }

    REQUIRE(cantor_breakpoints_unit(2) ==
            std::vector<double>{1.0 / 9.0, 2.0 / 9.0, 1.0 / 3.0, 2.0 / 3.0, 7.0 / 9.0, 8.0 / 9.0});
    CHECK(phi_n(5).breakpoints.size() == 2 * (32 - 1));
    CHECK_THROWS_AS(phi_n(-1), std::invalid_argument);
}

TEST_CASE("phi_cantor lift") {
    const auto lift = phi_cantor();
    CHECK(std::abs(lift.eval(two_pi) - two_pi) <= 1e-12);
    CHECK(lift.eval(pi) == Catch::Approx(pi).margin(1e-12));
    CHECK(lift.eval(pi / 2.0) == Catch::Approx(7.0 * pi / 12.0).margin(1e-12));
    CHECK_FALSE(lift.has_derivative());
    CHECK(lift.breakpoints.empty());
}

TEST_CASE("lift convergence is the affine transfer of psi convergence") {
    const int mesh = 2048;
    const auto limit = phi_cantor();
    for (int n : {1, 3, 5}) {
        const auto lift = phi_n(n);
        const auto pn = psi(n);
        double lift_sup = 0.0, psi_sup = 0.0;
        for (int i = 0; i <= mesh; ++i) {
            const double x = static_cast<double>(i) / mesh;
            const double t = two_pi * x;
            lift_sup = std::max(lift_sup, std::abs(lift.eval(t) - limit.eval(t)));
            psi_sup = std::max(psi_sup, std::abs(pn(x) - cantor_oracle(x)));
        }
        CHECK(lift_sup == Catch::Approx(pi * psi_sup).margin(1e-12));
    }
}

TEST_CASE("psi derivative follows the branch chain rule") {
    const auto p3 = psi(3);
    // middle branch kills the slope
    CHECK(p3.derivative(0.5) == 0.0);
    // deepest left copy scales by (3/2)^3
    const double x = 0.5 / 27.0;
    CHECK(p3.derivative(x) == Catch::Approx(std::pow(1.5, 3) * smoothstep_prime(0.5)).margin(1e-12));
    const auto no_deriv = cantor_iterate([](double y) { return y; }, 2);
    CHECK_THROWS_AS(no_deriv.derivative(0.1), std::logic_error);
}
