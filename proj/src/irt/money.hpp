#pragma once

#include <vector>

#include "irt/sticky.hpp"

namespace irt {

// Real money demand L = scale * Y^eta * exp(-xi*R). The paper-facing
// parameters are eta and xi; scale is a pure level knob (default 1) that lets
// callers rescale L wholesale, which is the cleanest way to exercise the
// endogeneity property (money moves, nothing else does).
struct MoneyDemandParams {
    double eta = 1.0;
    double xi = 0.5;
    double scale = 1.0;

    bool operator==(const MoneyDemandParams&) const = default;
};

double money_demand(double Y, double R, const MoneyDemandParams& params);

// Money stock that clears the money market each period given the simulated
// price level and output: M_t = P_t * L(Y_t, R_{t+1}). The terminal period has
// no successor rate and reuses its own.
std::vector<double> endogenous_money_path(const SimulationResult& result,
                                          const MoneyDemandParams& params);

// Finite-horizon money-anchored forecast. Prices come from the anchor money
// path divided by expected real balances, inflation from consecutive price
// ratios; the backward recursion P_k = P_{k+1}/(1+pi_{k+1}) holds by
// construction.
struct HorizonForecast {
    std::vector<double> money_path;
    std::vector<double> demand_path;
    std::vector<double> price_path;
    std::vector<double> inflation_path;  // one entry shorter than the others
};

HorizonForecast finite_horizon_forecast(const std::vector<double>& money_path,
                                        const std::vector<double>& demand_path);

}  // namespace irt
