#include "irt/money.hpp"

#include <cmath>
#include <string>

#include "irt/errors.hpp"
#include "irt/fmt.hpp"

namespace irt {

namespace {

void check_params(const MoneyDemandParams& params) {
    std::string problems;
    auto add = [&problems](const std::string& msg) {
        if (!problems.empty()) problems += "; ";
        problems += msg;
    };
    if (!(params.eta > 0.0)) add("eta must be positive");
    if (!(params.xi > 0.0)) add("xi must be positive");
    if (!(params.scale > 0.0)) add("scale must be positive");
    if (!problems.empty()) {
        throw ConfigError("invalid money-demand parameters: " + problems);
    }
}

}  // namespace

double money_demand(double Y, double R, const MoneyDemandParams& params) {
    check_params(params);
    if (!(Y > 0.0)) {
        throw ModelError("money_demand: output must be positive, got " + to_shortest(Y));
    }
    // L = scale * Y^eta * e^(-xi*R)
    return params.scale * std::pow(Y, params.eta) * std::exp(-params.xi * R);
}

std::vector<double> endogenous_money_path(const SimulationResult& result,
                                          const MoneyDemandParams& params) {
    check_params(params);
    const std::size_t n = result.nominal_price.size();
    if (n == 0) {
        throw ModelError("endogenous_money_path: empty simulation result");
    }
    if (result.real_output.size() != n || result.policy_rate.size() != n) {
        throw ModelError("endogenous_money_path: price, output and rate series must have "
                         "equal length");
    }
    std::vector<double> money(n);
    for (std::size_t t = 0; t < n; ++t) {
        if (!(result.real_output[t] > 0.0)) {
            throw ModelError("period " + std::to_string(t) +
                             ": real output must be positive, got " +
                             to_shortest(result.real_output[t]));
        }
        // M_t = P_t * L(Y_t, R_{t+1}); the last period reuses its own rate.
        const double next_rate =
            t + 1 < n ? result.policy_rate[t + 1] : result.policy_rate[t];
        money[t] = result.nominal_price[t] *
                   money_demand(result.real_output[t], next_rate, params);
    }
    return money;
}

HorizonForecast finite_horizon_forecast(const std::vector<double>& money_path,
                                        const std::vector<double>& demand_path) {
    const std::size_t n = money_path.size();
    if (n < 2) {
        throw ModelError("finite_horizon_forecast: need at least two periods, got " +
                         std::to_string(n));
    }
    if (demand_path.size() != n) {
        throw ModelError("finite_horizon_forecast: money and demand paths must have equal "
                         "length (" +
                         std::to_string(n) + " vs " + std::to_string(demand_path.size()) + ")");
    }
    HorizonForecast out;
    out.money_path = money_path;
    out.demand_path = demand_path;
    out.price_path.resize(n);
    out.inflation_path.resize(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        if (!(money_path[k] > 0.0)) {
            throw ModelError("period " + std::to_string(k) +
                             ": anchor money must be positive, got " +
                             to_shortest(money_path[k]));
        }
        if (!(demand_path[k] > 0.0)) {
            throw ModelError("period " + std::to_string(k) +
                             ": money demand must be positive, got " +
                             to_shortest(demand_path[k]));
        }
        out.price_path[k] = money_path[k] / demand_path[k];
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        out.inflation_path[k] = out.price_path[k + 1] / out.price_path[k] - 1.0;
    }
    return out;
}

}  // namespace irt
