#pragma once

namespace irt {

// Parameters of the three-equation sticky-price system closed by a pure
// inflation-targeting rule. beta and vartheta are not free: beta = 1/(1+theta)
// and vartheta = (1-beta)*pi_star, so that (pi*, 0, theta+pi*) is an exact
// fixed point of the system under anchored expectations.
struct NKParams {
    double gamma = 0.1;    // Phillips-curve slope on the output gap
    double alpha = 1.0;    // IS-curve slope on the real-rate gap
    double mu = 1.5;       // policy response to inflation deviations
    double theta = 0.015;  // subjective discount rate
    double pi_star = 0.03;
    double beta = 1.0 / 1.015;
    double vartheta = (1.0 - 1.0 / 1.015) * 0.03;

    // Builds a consistent parameter set from the free parameters only.
    static NKParams derived(double gamma, double alpha, double mu, double theta,
                            double pi_star);

    bool operator==(const NKParams&) const = default;
};

struct NKState {
    double pi = 0.0;  // inflation
    double x = 0.0;   // output gap
    double R = 0.0;   // policy rate
};

struct NKResiduals {
    double phillips = 0.0;
    double is = 0.0;
    double rule = 0.0;
};

// Throws ConfigError listing every violated parameter restriction.
void validate_nk(const NKParams& params);

// pi = pi*, x = 0, R = theta + pi* (the additive steady-state policy rate).
NKState nk_steady_state(const NKParams& params);

// Structural-equation residuals at an arbitrary state; all three vanish at the
// steady state with anchored expectations and zero shocks.
NKResiduals nk_residuals(const NKState& state, double expected_pi, double expected_x,
                         const NKParams& params, double eps_pi, double eps_x);

// Per-period closed-form solution with expectations anchored at the target:
//   pi = pi* + (gamma*eps_x + eps_pi) / (1 + gamma*alpha*mu)
//   x  = -alpha*mu*(pi - pi*) + eps_x
//   R  = theta + pi* + mu*(pi - pi*)
NKState nk_anchored_solve(const NKParams& params, double eps_pi, double eps_x);

}  // namespace irt
