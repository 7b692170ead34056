#pragma once

#include <vector>

#include "irt/nk.hpp"

namespace irt {

// Structural parameters of the closed-economy blocks. The defaults are the
// baseline parameter set: pi* = 3%, natural rate 1.5%, demand Y = b1 - a1*p,
// supply Y* = b2 + a2*p (a2 = 0 in the baseline), adjustment gain j.
struct Calibration {
    double pi_star = 0.03;  // inflation target, decimal per period
    double r_ss = 0.015;    // natural real rate; doubles as the NK discount rate
    double b1 = 1.0;        // demand intercept
    double b2 = 0.85;       // supply level
    double a1 = 0.15;       // demand slope
    double a2 = 0.0;        // supply slope
    double j = 0.6;         // price adjustment gain
    double xi = 0.5;        // money-demand rate semi-elasticity
    NKParams nk{};

    bool operator==(const Calibration&) const = default;
};

// Constants implied by a calibration.
struct DerivedConstants {
    double R_bar = 0.0;   // (1+r_ss)(1+pi_star) - 1, the target-consistent policy rate
    double c1 = 0.0;      // b1 - b2
    double p_star = 0.0;  // c1 / (a1 + a2), equilibrium real price
};

// R = (1+r_ss)(1+pi) - 1. Rejects rates <= -1.
double fisher_policy_rate(double r_ss, double pi_star);

// Exact inverse of fisher_policy_rate in its first argument.
double fisher_expected_inflation(double R_bar, double r_ss);

// P_t = P0*(1+pi*)^t for t = 0..horizon (horizon+1 values).
std::vector<double> steady_price_path(double P0, double pi_star, int horizon);

// Checks every calibration invariant (one diagnostic per violation, naming the
// parameter) and returns the derived constants.
DerivedConstants validate_calibration(const Calibration& cal);

}  // namespace irt
