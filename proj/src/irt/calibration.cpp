#include "irt/calibration.hpp"

#include <cmath>
#include <string>

#include "irt/errors.hpp"

namespace irt {

double fisher_policy_rate(double r_ss, double pi_star) {
    if (r_ss <= -1.0) {
        throw ModelError("fisher_policy_rate: real rate must exceed -1, got " +
                         std::to_string(r_ss));
    }
    if (pi_star <= -1.0) {
        throw ModelError("fisher_policy_rate: inflation must exceed -1, got " +
                         std::to_string(pi_star));
    }
    // R = (1+r)(1+pi) - 1
    return (1.0 + r_ss) * (1.0 + pi_star) - 1.0;
}

double fisher_expected_inflation(double R_bar, double r_ss) {
    if (R_bar <= -1.0) {
        throw ModelError("fisher_expected_inflation: nominal rate must exceed -1, got " +
                         std::to_string(R_bar));
    }
    if (r_ss <= -1.0) {
        throw ModelError("fisher_expected_inflation: real rate must exceed -1, got " +
                         std::to_string(r_ss));
    }
    // pi = (1+R)/(1+r) - 1
    return (1.0 + R_bar) / (1.0 + r_ss) - 1.0;
}

std::vector<double> steady_price_path(double P0, double pi_star, int horizon) {
    if (P0 <= 0.0) {
        throw ModelError("steady_price_path: initial price level must be positive, got " +
                         std::to_string(P0));
    }
    if (pi_star <= -1.0) {
        throw ModelError("steady_price_path: inflation must exceed -1, got " +
                         std::to_string(pi_star));
    }
    if (horizon < 1) {
        throw ModelError("steady_price_path: horizon must be at least 1, got " +
                         std::to_string(horizon));
    }
    std::vector<double> path;
    path.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int t = 0; t <= horizon; ++t) {
        path.push_back(P0 * std::pow(1.0 + pi_star, static_cast<double>(t)));
    }
    return path;
}

DerivedConstants validate_calibration(const Calibration& cal) {
    std::string problems;
    auto add = [&problems](const std::string& msg) {
        if (!problems.empty()) problems += "; ";
        problems += msg;
    };

    if (!(cal.pi_star > -1.0) || !std::isfinite(cal.pi_star)) {
        add("pi_star must exceed -1");
    }
    if (!(cal.r_ss > -1.0) || !std::isfinite(cal.r_ss)) {
        add("r_ss must exceed -1");
    }
    if (!(cal.a1 > 0.0) || !std::isfinite(cal.a1)) {
        add("a1 must be positive");
    }
    if (!(cal.a2 >= 0.0) || !std::isfinite(cal.a2)) {
        add("a2 must be non-negative");
    }
    if (!(cal.a1 + cal.a2 > 0.0)) {
        add("a1+a2 must be positive");
    }
    if (!(cal.b1 - cal.b2 > 0.0) || !std::isfinite(cal.b1) || !std::isfinite(cal.b2)) {
        add("b1 - b2 must be positive");
    }
    if (!(cal.j > 0.0) || !std::isfinite(cal.j)) {
        add("j must be positive");
    }
    if (!(cal.xi > 0.0) || !std::isfinite(cal.xi)) {
        add("xi must be positive");
    }
    if (cal.nk.theta != cal.r_ss) {
        add("nk.theta must equal r_ss");
    }
    if (cal.nk.pi_star != cal.pi_star) {
        add("nk.pi_star must equal pi_star");
    }
    if (!problems.empty()) {
        throw ConfigError("invalid calibration: " + problems);
    }
    validate_nk(cal.nk);

    DerivedConstants dc;
    dc.R_bar = fisher_policy_rate(cal.r_ss, cal.pi_star);
    dc.c1 = cal.b1 - cal.b2;
    dc.p_star = dc.c1 / (cal.a1 + cal.a2);
    return dc;
}

}  // namespace irt
