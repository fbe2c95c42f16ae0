// Cantor function, its three-branch fixed-point recursion and the lifts
// phi_n, phi_C built from it.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hqdisk/lift.hpp"

namespace hqdisk {

// Ternary-digit evaluation of the Cantor function: expand x in base 3,
// truncate at the first digit 1 (mapped to binary 1), map digits 2 -> 1 and
// read the result in base 2.  Capped at 64 ternary digits, which is past
// double resolution; the cap is the oracle's own error floor (~3^-64).
inline double cantor_oracle(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("cantor_oracle: x outside [0,1]: " + std::to_string(x));
    if (x == 1.0) return 1.0;
    double result = 0.0;
    double scale = 0.5;
    for (int i = 0; i < 64 && x > 0.0; ++i) {
        x *= 3.0;
        int digit = static_cast<int>(x);
        if (digit > 2) digit = 2;
        x -= digit;
        if (digit == 1) return result + scale;
        if (digit == 2) result += scale;
        scale *= 0.5;
    }
    return result;
}

// One evaluator for the sequence psi_n obtained by applying the recursion
//   psi_{n+1}(x) = psi_n(3x)/2          for x <= 1/3,
//   psi_{n+1}(x) = 1/2                  for 1/3 < x < 2/3,
//   psi_{n+1}(x) = 1/2 + psi_n(3x-2)/2  for x >= 2/3
// n times to `base`.  Evaluation descends the branch structure per point,
// O(n) per call; boundary points use the closed-bracket branches above.
struct CantorApproximant {
    int n = 0;
    std::function<double(double)> base;
    std::function<double(double)> base_derivative; // may be empty

    // literal recursive descent, so psi_{n+1}(x) is computed as exactly
    // psi_n(3x)/2 resp. 1/2 + psi_n(3x-2)/2 bit for bit
    double operator()(double x) const { return value_(x, n); }

    // each side branch contributes a factor 3 * 1/2 to the slope
    double derivative(double x) const {
        if (!base_derivative)
            throw std::logic_error("CantorApproximant::derivative: base derivative not supplied");
        return slope_(x, n);
    }

private:
    double value_(double x, int level) const {
        if (level == 0) return base(x);
        if (x <= 1.0 / 3.0) return 0.5 * value_(3.0 * x, level - 1);
        if (x < 2.0 / 3.0) return 0.5;
        return 0.5 + 0.5 * value_(3.0 * x - 2.0, level - 1);
    }

    double slope_(double x, int level) const {
        if (level == 0) return base_derivative(x);
        if (x <= 1.0 / 3.0) return 1.5 * slope_(3.0 * x, level - 1);
        if (x < 2.0 / 3.0) return 0.0;
        return 1.5 * slope_(3.0 * x - 2.0, level - 1);
    }
};

inline CantorApproximant cantor_iterate(std::function<double(double)> base, int n,
                                        std::function<double(double)> base_derivative = {}) {
    if (n < 0) throw std::invalid_argument("cantor_iterate: n must be >= 0");
    return CantorApproximant{n, std::move(base), std::move(base_derivative)};
}

// segment joints of psi_n in [0,1]: the endpoints of all removed middle
// thirds down to level n (2(2^n - 1) points)
inline std::vector<double> cantor_breakpoints_unit(int n) {
    std::vector<double> cur;
    for (int level = 0; level < n; ++level) {
        std::vector<double> next{1.0 / 3.0, 2.0 / 3.0};
        next.reserve(2 * cur.size() + 2);
        for (double b : cur) {
            next.push_back(b / 3.0);
            next.push_back((b + 2.0) / 3.0);
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    return cur;
}

// phi_n(t) = pi * (psi_n(t/2pi) + t/2pi) with smoothstep seed; C^2 for every n
// because the seed's first and second derivatives vanish at 0 and 1
inline LiftFunction phi_n(int n) {
    if (n < 0) throw std::invalid_argument("phi_n: n must be >= 0");
    auto psi = cantor_iterate([](double x) { return smoothstep(x); }, n,
                              [](double x) { return smoothstep_prime(x); });
    std::vector<double> bps = cantor_breakpoints_unit(n);
    return lift_from_unit_map([psi](double x) { return psi(x); },
                              [psi](double x) { return psi.derivative(x); },
                              std::move(bps));
}

// phi_C(t) = pi * (C(t/2pi) + t/2pi): strictly increasing (slope >= 1/2 from
// the linear term) but with no usable derivative -- C' = 0 a.e. and undefined
// on the Cantor set, so derivative is absent and breakpoints cannot be listed.
inline LiftFunction phi_cantor() {
    return LiftFunction{
        [](double t) {
            double x = t / two_pi;
            if (x < 0.0) x = 0.0;
            if (x > 1.0) x = 1.0;
            return std::numbers::pi * (cantor_oracle(x) + t / two_pi);
        },
        {},
        {}};
}

inline BoundaryMap gamma_n(int n) { return BoundaryMap{phi_n(n), false}; }
inline BoundaryMap gamma_cantor() { return BoundaryMap{phi_cantor(), false}; }

} // namespace hqdisk
