#pragma once

#include <optional>
#include <string>
#include <vector>

namespace irt {

// Small-open-economy price block: the domestic price level is imported through
// the exchange rate, P = lambda * P_ext * gamma0 * exp(gamma1*u), where u is
// the unanticipated rate spread (R - R_ext)^un.
struct SOEParams {
    double lambda = 1.0;   // inverse real exchange rate (constant)
    double gamma0 = 1.0;   // exchange-rate base level
    double gamma1 = -1.0;  // spread sensitivity, strictly negative

    bool operator==(const SOEParams&) const = default;
};

// One period of externally given inputs. Expected depreciation is either
// supplied directly (gamma0_hat) or derived from uncovered interest parity
// out of the expected domestic and external rates.
struct ExternalPoint {
    int period = 0;
    double external_price = 1.0;      // P*
    double external_inflation = 0.0;  // pi*_ext
    double u = 0.0;                   // unanticipated spread
    std::optional<double> gamma0_hat;
    std::optional<double> expected_R;
    std::optional<double> expected_R_ext;
    std::optional<double> uip_eps;

    bool operator==(const ExternalPoint&) const = default;
};

using ExternalPath = std::vector<ExternalPoint>;

struct SOEResult {
    std::vector<double> exchange_rate;
    std::vector<double> price_level;
    std::vector<double> inflation;
    std::vector<double> expected_depreciation;
    std::vector<std::string> warnings;
};

// One diagnostic per violated restriction (lambda > 0, gamma0 > 0, gamma1 < 0).
void validate_soe(const SOEParams& params);

// gamma0 * exp(gamma1 * u); strictly decreasing in u.
double exchange_rate(const SOEParams& params, double u);

// P = lambda * p_ext * exchange_rate(params, u).
double soe_price_level(const SOEParams& params, double p_ext, double u);

// pi = pi_ext + gamma0_hat + gamma1 * du.
double soe_inflation(double pi_ext, double gamma0_hat, double gamma1, double du);

// ln(1+expected_R) - ln(1+expected_R_ext) + eps.
double uip_expected_depreciation(double expected_R, double expected_R_ext, double eps);

// Evaluates the block over consecutive periods starting at 0. du is the first
// difference of u with du_0 = 0. A directly given gamma0_hat wins over the
// UIP inputs (with a warning when both are present); a period with neither is
// an error.
SOEResult evaluate_soe_path(const SOEParams& params, const ExternalPath& path);

}  // namespace irt
