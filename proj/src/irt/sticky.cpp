#include "irt/sticky.hpp"

#include <cmath>
#include <string>

#include "irt/errors.hpp"
#include "irt/fmt.hpp"

namespace irt {

namespace {

// Linearized demand/supply curves lose meaning once inflation strays this far
// from target; runs are still produced but flagged.
constexpr double kInflationValidityBand = 0.25;

std::string at_period(int t) { return "period " + std::to_string(t) + ": "; }

void validate_shocks(const ShockSchedule& shocks, int horizon) {
    int prev = -1;
    for (const Shock& s : shocks.events) {
        if (s.period < 0) {
            throw ConfigError("shock period must be non-negative, got " +
                              std::to_string(s.period));
        }
        if (s.period <= prev) {
            throw ConfigError("shock periods must be strictly increasing");
        }
        if (s.period >= horizon) {
            throw ConfigError("shock period " + std::to_string(s.period) +
                              " must be below the horizon " + std::to_string(horizon));
        }
        if (!(s.size > -1.0)) {
            throw ConfigError("shock size must exceed -1, got " + to_shortest(s.size));
        }
        prev = s.period;
    }
}

void validate_policy(const PolicyPath& policy, int horizon) {
    if (policy.mode == PolicyPath::Mode::constant && !policy.points.empty()) {
        throw ConfigError("constant policy cannot carry explicit rate points");
    }
    int prev = -1;
    for (const RatePoint& pt : policy.points) {
        if (pt.period < 0) {
            throw ConfigError("policy period must be non-negative, got " +
                              std::to_string(pt.period));
        }
        if (pt.period <= prev) {
            throw ConfigError("policy periods must be strictly increasing");
        }
        if (pt.period >= horizon) {
            throw ConfigError("policy period " + std::to_string(pt.period) +
                              " must be below the horizon " + std::to_string(horizon));
        }
        if (!(pt.rate > -1.0)) {
            throw ConfigError("policy rate must exceed -1, got " + to_shortest(pt.rate));
        }
        prev = pt.period;
    }
}

}  // namespace

double equilibrium_real_price(const Calibration& cal) {
    // p* = c1/(a1+a2); Calibration invariants guarantee both parts.
    return (cal.b1 - cal.b2) / (cal.a1 + cal.a2);
}

double premium(double R_t, double R_bar) {
    if (R_t <= -1.0) {
        throw ModelError("premium: policy rate must exceed -1, got " + to_shortest(R_t));
    }
    const double rho = 1.0 + R_t - R_bar;
    if (!(rho > 0.0)) {
        throw ModelError("premium: premium must be positive, got " + to_shortest(rho));
    }
    return rho;
}

double adjustment_speed(double j, double rho, double R_t, double R_bar, SpeedMode mode) {
    if (!(j > 0.0)) {
        throw ModelError("adjustment_speed: j must be positive, got " + to_shortest(j));
    }
    if (!(rho > 0.0)) {
        throw ModelError("adjustment_speed: premium must be positive, got " +
                         to_shortest(rho));
    }
    double q = 0.0;
    switch (mode) {
        case SpeedMode::paper_literal:
            q = j / rho;
            break;
        case SpeedMode::figure_consistent:
            q = j * (1.0 + 100.0 * (R_t - R_bar));
            break;
    }
    if (!(q > 0.0)) {
        throw ModelError("adjustment_speed: speed must be positive, got " + to_shortest(q));
    }
    return q;
}

double real_price_step(double p_t, double p_star, double q_t, double a1, double a2) {
    if (!(q_t > 0.0)) {
        throw ModelError("real_price_step: q must be positive, got " + to_shortest(q_t));
    }
    return p_star + (p_t - p_star) * std::exp(-q_t * (a1 + a2));
}

double closed_form_real_price(double p_star, double s, double q, double a1, double a2,
                              double tau) {
    if (!(q > 0.0)) {
        throw ModelError("closed_form_real_price: q must be positive, got " + to_shortest(q));
    }
    if (tau < 0.0) {
        throw ModelError("closed_form_real_price: tau must be non-negative, got " +
                         to_shortest(tau));
    }
    return p_star + s * std::exp(-q * (a1 + a2) * tau);
}

double nominal_price(double p_t, double pi_star, int t) {
    if (!(p_t > 0.0)) {
        throw ModelError("nominal_price: real price must be positive, got " +
                         to_shortest(p_t));
    }
    if (t < 0) {
        throw ModelError("nominal_price: period must be non-negative, got " +
                         std::to_string(t));
    }
    return p_t * std::pow(1.0 + pi_star, static_cast<double>(t));
}

double output_gap(double p_t, const Calibration& cal) {
    return (cal.b1 - cal.a1 * p_t) - (cal.b2 + cal.a2 * p_t);
}

double real_output(double p_t, const Calibration& cal) { return cal.b1 - cal.a1 * p_t; }

double observed_inflation(double P_t, double P_prev) {
    if (!(P_prev > 0.0)) {
        throw ModelError("observed_inflation: previous price must be positive, got " +
                         to_shortest(P_prev));
    }
    if (!(P_t > 0.0)) {
        throw ModelError("observed_inflation: price must be positive, got " +
                         to_shortest(P_t));
    }
    return P_t / P_prev - 1.0;
}

std::vector<double> expand_policy(const PolicyPath& path, double R_bar, int horizon) {
    if (horizon < 1) {
        throw ModelError("expand_policy: horizon must be at least 1, got " +
                         std::to_string(horizon));
    }
    validate_policy(path, horizon);
    std::vector<double> rates(static_cast<std::size_t>(horizon) + 1, R_bar);
    for (const RatePoint& pt : path.points) {
        rates[static_cast<std::size_t>(pt.period)] = pt.rate;
    }
    return rates;
}

SimulationResult simulate_sticky(const Calibration& cal, const ShockSchedule& shocks,
                                 const PolicyPath& policy, SpeedMode mode, int horizon) {
    if (horizon < 2) {
        throw ModelError("simulate_sticky: horizon must be at least 2, got " +
                         std::to_string(horizon));
    }
    const DerivedConstants dc = validate_calibration(cal);
    validate_shocks(shocks, horizon);
    const std::vector<double> rates = expand_policy(policy, dc.R_bar, horizon);

    const std::size_t n = static_cast<std::size_t>(horizon) + 1;
    SimulationResult out;
    out.real_price.resize(n);
    out.nominal_price.resize(n);
    out.inflation.resize(n);
    out.output_gap.resize(n);
    out.real_output.resize(n);
    out.policy_rate = rates;
    out.premium.resize(n);
    out.speed.resize(n);

    std::size_t next_shock = 0;
    for (int t = 0; t <= horizon; ++t) {
        const std::size_t i = static_cast<std::size_t>(t);
        const double R = rates[i];
        double rho;
        double q;
        try {
            rho = premium(R, dc.R_bar);
            q = adjustment_speed(cal.j, rho, R, dc.R_bar, mode);
        } catch (const ModelError& e) {
            throw ModelError(at_period(t) + e.what());
        }
        out.premium[i] = rho;
        out.speed[i] = q;

        double p;
        if (t == 0) {
            p = dc.p_star;
        } else {
            p = real_price_step(out.real_price[i - 1], dc.p_star, q, cal.a1, cal.a2);
        }
        if (next_shock < shocks.events.size() && shocks.events[next_shock].period == t) {
            p += shocks.events[next_shock].size * dc.p_star;
            ++next_shock;
        }
        if (!(p > 0.0)) {
            throw ModelError(at_period(t) + "real price became non-positive (" +
                             to_shortest(p) + ")");
        }
        out.real_price[i] = p;
        out.nominal_price[i] = nominal_price(p, cal.pi_star, t);
        out.inflation[i] =
            t == 0 ? cal.pi_star
                   : observed_inflation(out.nominal_price[i], out.nominal_price[i - 1]);
        out.output_gap[i] = output_gap(p, cal);
        out.real_output[i] = real_output(p, cal);

        if (std::abs(out.inflation[i] - cal.pi_star) > kInflationValidityBand) {
            out.warnings.push_back(at_period(t) + "inflation " + to_shortest(out.inflation[i]) +
                                   " is more than " + to_shortest(kInflationValidityBand) +
                                   " away from target " + to_shortest(cal.pi_star) +
                                   "; the linearized curves are outside their validity range");
        }
    }
    return out;
}

}  // namespace irt
