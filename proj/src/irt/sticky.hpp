#pragma once

#include <string>
#include <vector>

#include "irt/calibration.hpp"

namespace irt {

// How the policy rate maps into the price-adjustment speed q.
//   paper_literal:     q = j / rho, rho = 1 + R - R_bar  (tightening slows adjustment)
//   figure_consistent: q = j * (1 + 100*(R - R_bar))     (tightening speeds adjustment)
enum class SpeedMode {
    paper_literal,
    figure_consistent,
};

// Additive real-price disturbance: p_period += size * p_star.
struct Shock {
    int period = 0;
    double size = 0.0;

    bool operator==(const Shock&) const = default;
};

// Scheduled one-off shocks; periods non-negative and strictly increasing,
// sizes > -1 (a size of -1 would wipe out the whole equilibrium price).
struct ShockSchedule {
    std::vector<Shock> events;

    bool operator==(const ShockSchedule&) const = default;
};

struct RatePoint {
    int period = 0;
    double rate = 0.0;

    bool operator==(const RatePoint&) const = default;
};

// Nominal policy-rate schedule. Constant mode fills every period with R_bar;
// explicit mode sets the listed periods and leaves every unlisted period at
// R_bar.
struct PolicyPath {
    enum class Mode {
        constant,
        explicit_path,
    };
    Mode mode = Mode::constant;
    std::vector<RatePoint> points;

    bool operator==(const PolicyPath&) const = default;
};

// Per-period series produced by the sticky-price simulation, all of length
// horizon+1. `money` is filled by the caller once a money-demand block is
// attached; the simulation itself leaves it empty.
struct SimulationResult {
    std::vector<double> real_price;
    std::vector<double> nominal_price;
    std::vector<double> inflation;
    std::vector<double> output_gap;
    std::vector<double> real_output;
    std::vector<double> policy_rate;
    std::vector<double> premium;
    std::vector<double> speed;
    std::vector<double> money;
    std::vector<std::string> warnings;
};

// p* = c1 / (a1 + a2); validity of the calibration is enforced upstream.
double equilibrium_real_price(const Calibration& cal);

// rho = 1 + R_t - R_bar; rejects non-positive results (the speed channel is
// undefined there).
double premium(double R_t, double R_bar);

// q per SpeedMode: paper_literal uses j/rho, figure_consistent re-measures the
// rate deviation in percentage points, j*(1 + 100*(R_t - R_bar)). Throws if
// the resulting speed is not positive.
double adjustment_speed(double j, double rho, double R_t, double R_bar, SpeedMode mode);

// One period of the exact solution of dp/dt = q*(c1 - (a1+a2)*p) with q frozen:
// p' = p* + (p - p*) * exp(-q*(a1+a2)).
double real_price_step(double p_t, double p_star, double q_t, double a1, double a2);

// p after tau periods from an initial displacement s under a constant speed:
// p* + s * exp(-q*(a1+a2)*tau).
double closed_form_real_price(double p_star, double s, double q, double a1, double a2,
                              double tau);

// P_t = p_t * (1+pi_star)^t.
double nominal_price(double p_t, double pi_star, int t);

// x = (b1 - a1*p) - (b2 + a2*p) = c1 - (a1+a2)*p; zero exactly at p = p*.
double output_gap(double p_t, const Calibration& cal);

// Short-run output is demand-determined: Y = b1 - a1*p.
double real_output(double p_t, const Calibration& cal);

// pi_t = P_t / P_prev - 1.
double observed_inflation(double P_t, double P_prev);

// One rate per period 0..horizon: R_bar everywhere except the listed points.
std::vector<double> expand_policy(const PolicyPath& path, double R_bar, int horizon);

// Runs the sticky-price block over periods 0..horizon. The step from t-1 to t
// uses the premium and speed implied by the rate in force at t; shocks
// scheduled at t are added after that step, and every period-t series value is
// derived from the post-shock price.
SimulationResult simulate_sticky(const Calibration& cal, const ShockSchedule& shocks,
                                 const PolicyPath& policy, SpeedMode mode, int horizon);

}  // namespace irt
