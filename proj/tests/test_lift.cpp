#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hqdisk/lift.hpp"

using namespace hqdisk;
using std::numbers::pi;

TEST_CASE("canonical extension") {
    const auto id = identity_lift();
    CHECK(lift_extend(id, two_pi + 1.0) == Catch::Approx(two_pi + 1.0).margin(1e-12));

    const auto ex3 = example3_lift();
    const auto phi0 = smoothstep_lift();
    for (double t0 : {0.0, 0.4, 2.0, 5.1}) {
        CHECK(lift_extend(ex3, t0 + two_pi) == Catch::Approx(ex3.eval(t0) + two_pi).margin(1e-12));
        CHECK(lift_extend(phi0, t0 + two_pi) == Catch::Approx(phi0.eval(t0) + two_pi).margin(1e-12));
    }

    // k = -1 branch evaluated directly
    CHECK(lift_extend(ex3, -two_pi / 3.0) ==
          Catch::Approx(ex3.eval(2.0 * two_pi / 3.0) - two_pi).margin(1e-12));
}

TEST_CASE("extension consistency over random (t, k)") {
    std::mt19937 gen(7);
    auto u01 = [&] { return static_cast<double>(gen() >> 8) * 0x1.0p-24; };
    const auto lifts = {identity_lift(), smoothstep_lift(), example3_lift()};
    for (const auto& lift : lifts) {
        for (int i = 0; i < 3000; ++i) {
            const double t = two_pi * u01();
            const int k = static_cast<int>(gen() % 21) - 10;
            const double got = lift_extend(lift, t + two_pi * k) - lift_extend(lift, t);
            CHECK(std::abs(got - two_pi * k) <= 1e-9);
        }
    }
}

TEST_CASE("example3 piecewise values") {
    const auto ex3 = example3_lift();
    CHECK(ex3.eval(0.0) == 0.0);
    CHECK(ex3.eval(two_pi / 3.0) / two_pi == Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(ex3.eval(1.5 * pi) / two_pi == Catch::Approx(2.0 / 3.0).margin(1e-15));
    CHECK(ex3.eval(two_pi) == Catch::Approx(two_pi).margin(1e-12));
    // flat segment
    CHECK(ex3.eval(3.0) == ex3.eval(4.0));
    REQUIRE(ex3.breakpoints.size() == 2);
    CHECK(ex3.breakpoints[0] == Catch::Approx(two_pi / 3.0));
    CHECK(ex3.breakpoints[1] == Catch::Approx(1.5 * pi));
}

TEST_CASE("smoothstep seed") {
    CHECK(smoothstep(0.0) == 0.0);
    CHECK(smoothstep(1.0) == 1.0);
    CHECK(smoothstep(0.5) == Catch::Approx(0.5).margin(1e-15));
    CHECK(smoothstep(0.25) == 0.103515625); // exact dyadic polynomial value
    CHECK(smoothstep_prime(0.0) == 0.0);
    CHECK(smoothstep_prime(1.0) == 0.0);
    CHECK(smoothstep_second(0.0) == 0.0);
    CHECK(smoothstep_second(1.0) == 0.0);
    CHECK(smoothstep_prime(0.5) == Catch::Approx(1.875));

    const auto phi0 = smoothstep_lift();
    CHECK(phi0.eval(pi) == Catch::Approx(pi).margin(1e-12));
    CHECK(phi0.eval(two_pi) - phi0.eval(0.0) == Catch::Approx(two_pi).margin(1e-12));
}

TEST_CASE("convex combinations") {
    const auto phi0 = smoothstep_lift();
    const auto id = identity_lift();

    SECTION("endpoint and idempotence") {
        const auto at_one = convex_combination(phi0, id, 1.0);
        const auto same = convex_combination(phi0, phi0, 0.31);
        for (int i = 0; i <= 32; ++i) {
            const double t = two_pi * i / 32.0;
            CHECK(at_one.eval(t) == Catch::Approx(phi0.eval(t)).margin(1e-15));
            CHECK(same.eval(t) == Catch::Approx(phi0.eval(t)).margin(1e-15));
        }
    }
    SECTION("midpoint value") {
        const auto mid = convex_combination(phi0, id, 0.5);
        CHECK(mid.eval(pi) == Catch::Approx(0.5 * (phi0.eval(pi) + pi)).margin(1e-15));
    }
    SECTION("lambda domain") {
        CHECK_THROWS_AS(convex_combination(phi0, id, 1.2), std::domain_error);
        CHECK_THROWS_AS(convex_combination(phi0, id, -0.1), std::domain_error);
    }
    SECTION("breakpoints are merged") {
        const auto c = convex_combination(example3_lift(), phi0, 0.5);
        CHECK(c.breakpoints.size() == 2);
    }
}

TEST_CASE("bi-Lipschitz estimates") {
    const auto id_est = estimate_bilipschitz(identity_lift(), 256);
    CHECK(id_est.upper == Catch::Approx(1.0).margin(1e-12));
    CHECK(id_est.lower == Catch::Approx(1.0).margin(1e-12));

    const auto ex3_est = estimate_bilipschitz(example3_lift(), 1024);
    CHECK(ex3_est.lower <= 1e-15); // flat middle segment
    CHECK(ex3_est.upper == Catch::Approx(2.0).margin(1e-9));

    // max slope of the transferred smoothstep: (15/8 + 1)/2
    const auto phi0_est = estimate_bilipschitz(smoothstep_lift(), 4096);
    CHECK(phi0_est.upper == Catch::Approx(1.4375).margin(1e-6));
    CHECK(phi0_est.lower == Catch::Approx(0.5).margin(1e-6));

    CHECK_THROWS_AS(estimate_bilipschitz(identity_lift(), 8), std::invalid_argument);
}

TEST_CASE("mobius trace lifts") {
    std::mt19937 gen(11);
    auto u01 = [&] { return static_cast<double>(gen() >> 8) * 0x1.0p-24; };
    for (std::complex<double> a : {std::complex<double>{0.3, 0.0},
                                   std::complex<double>{-0.2, 0.25},
                                   std::complex<double>{0.0, 0.45}}) {
        const auto lift = mobius_trace_lift(a);
        CHECK(lift.eval(two_pi) - lift.eval(0.0) == Catch::Approx(two_pi).margin(1e-12));
        for (int i = 0; i < 16; ++i) {
            const double t = two_pi * u01();
            const double fd = (lift(t + 1e-6) - lift(t - 1e-6)) / 2e-6;
            CHECK(lift.derivative_periodic(t) == Catch::Approx(fd).margin(1e-7));
            CHECK(lift.derivative_periodic(t) > 0.0);
        }
        // extreme slopes of the boundary correspondence
        const double m = std::abs(a);
        const auto est = estimate_bilipschitz(lift, 4096);
        CHECK(est.upper == Catch::Approx((1.0 + m) / (1.0 - m)).margin(1e-4));
        CHECK(est.lower == Catch::Approx((1.0 - m) / (1.0 + m)).margin(1e-4));
    }
    CHECK_THROWS_AS(mobius_trace_lift({1.2, 0.0}), std::domain_error);
}

TEST_CASE("convex combinations stay monotone with controlled constants") {
    std::mt19937 gen(23);
    auto u01 = [&] { return static_cast<double>(gen() >> 8) * 0x1.0p-24; };
    std::vector<LiftFunction> family{identity_lift(), smoothstep_lift(), mobius_trace_lift(0.3),
                                     mobius_trace_lift({0.2, -0.3})};
    for (int trial = 0; trial < 20; ++trial) {
        const auto& f1 = family[gen() % family.size()];
        const auto& f2 = family[gen() % family.size()];
        const double lambda = u01();
        const auto combo = convex_combination(f1, f2, lambda);

        CHECK(std::abs(combo.eval(two_pi) - combo.eval(0.0) - two_pi) <= 1e-9);

        const auto intervals = detail::quotient_intervals(512, combo.breakpoints);
        const auto qc = detail::quotient_extrema(combo, intervals);
        const auto q1 = detail::quotient_extrema(f1, intervals);
        const auto q2 = detail::quotient_extrema(f2, intervals);
        CHECK(qc.upper <= std::max(q1.upper, q2.upper) + 1e-9);
        CHECK(qc.lower >= std::min(q1.lower, q2.lower) - 1e-9);
    }
}

TEST_CASE("rotated lift and boundary map") {
    const auto phi0 = smoothstep_lift();
    const auto rot = rotated(phi0, 0.7);
    CHECK(rot.eval(1.3) == Catch::Approx(phi0.eval(1.3) + 0.7).margin(1e-15));
    CHECK(rot.derivative_periodic(1.3) == phi0.derivative_periodic(1.3));

    BoundaryMap gamma{identity_lift(), false};
    const auto w = gamma(pi / 3.0);
    CHECK(w.real() == Catch::Approx(0.5).margin(1e-15));
    CHECK(w.imag() == Catch::Approx(std::sqrt(3.0) / 2.0).margin(1e-15));
}
