#include "irt/nk.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "irt/errors.hpp"

namespace irt {

namespace {

constexpr double kUlpTol = 4.0 * std::numeric_limits<double>::epsilon();

void join_and_throw(const std::vector<std::string>& problems) {
    std::string msg = "invalid NK parameters: ";
    for (size_t i = 0; i < problems.size(); ++i) {
        if (i > 0) msg += "; ";
        msg += problems[i];
    }
    throw ConfigError(msg);
}

}  // namespace

NKParams NKParams::derived(double gamma, double alpha, double mu, double theta,
                           double pi_star) {
    NKParams p;
    p.gamma = gamma;
    p.alpha = alpha;
    p.mu = mu;
    p.theta = theta;
    p.pi_star = pi_star;
    p.beta = 1.0 / (1.0 + theta);
    p.vartheta = (1.0 - p.beta) * pi_star;
    return p;
}

void validate_nk(const NKParams& p) {
    std::vector<std::string> problems;
    if (!(p.gamma > 0.0)) problems.push_back("gamma must be positive");
    if (!(p.alpha > 0.0)) problems.push_back("alpha must be positive");
    if (!(p.mu > 0.0)) problems.push_back("mu must be positive");
    if (!(p.theta > 0.0 && p.theta < 1.0)) problems.push_back("theta must lie in (0, 1)");
    if (!(std::fabs(p.beta * (1.0 + p.theta) - 1.0) <= kUlpTol))
        problems.push_back("beta must equal 1/(1+theta)");
    if (!(std::fabs(p.vartheta - (1.0 - p.beta) * p.pi_star) <= kUlpTol))
        problems.push_back("vartheta must equal (1-beta)*pi_star");
    if (!problems.empty()) join_and_throw(problems);
}

NKState nk_steady_state(const NKParams& p) {
    return {p.pi_star, 0.0, p.theta + p.pi_star};
}

NKResiduals nk_residuals(const NKState& s, double expected_pi, double expected_x,
                         const NKParams& p, double eps_pi, double eps_x) {
    NKResiduals r;
    r.phillips = s.pi - p.vartheta - p.beta * expected_pi - p.gamma * s.x - eps_pi;
    r.is = s.x - expected_x + p.alpha * (s.R - expected_pi - p.theta) - eps_x;
    r.rule = s.R - p.theta - p.pi_star - p.mu * (s.pi - p.pi_star);
    return r;
}

NKState nk_anchored_solve(const NKParams& p, double eps_pi, double eps_x) {
    const double denom = 1.0 + p.gamma * p.alpha * p.mu;
    if (denom == 0.0)
        throw ModelError("nk_anchored_solve: 1 + gamma*alpha*mu must be nonzero");
    const double dpi = (p.gamma * eps_x + eps_pi) / denom;
    NKState s;
    s.pi = p.pi_star + dpi;
    s.x = -p.alpha * p.mu * dpi + eps_x;
    s.R = p.theta + p.pi_star + p.mu * dpi;
    return s;
}

}  // namespace irt
