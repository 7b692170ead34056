#include "irt/soe.hpp"

#include <cmath>

#include "irt/errors.hpp"
#include "irt/fmt.hpp"

namespace irt {

namespace {

std::string at_period(int t) { return "period " + std::to_string(t) + ": "; }

}  // namespace

void validate_soe(const SOEParams& params) {
    std::string problems;
    auto add = [&problems](const std::string& msg) {
        if (!problems.empty()) problems += "; ";
        problems += msg;
    };
    if (!(params.lambda > 0.0)) {
        add("lambda must be positive");
    }
    if (!(params.gamma0 > 0.0)) {
        add("gamma0 must be positive");
    }
    if (!(params.gamma1 < 0.0)) {
        add("gamma1 must be negative");
    }
    if (!problems.empty()) {
        throw ConfigError("invalid soe parameters: " + problems);
    }
}

double exchange_rate(const SOEParams& params, double u) {
    validate_soe(params);
    return params.gamma0 * std::exp(params.gamma1 * u);
}

double soe_price_level(const SOEParams& params, double p_ext, double u) {
    if (!(p_ext > 0.0)) {
        throw ModelError("soe_price_level: external price must be positive, got " +
                         to_shortest(p_ext));
    }
    return params.lambda * p_ext * exchange_rate(params, u);
}

double soe_inflation(double pi_ext, double gamma0_hat, double gamma1, double du) {
    return pi_ext + gamma0_hat + gamma1 * du;
}

double uip_expected_depreciation(double expected_R, double expected_R_ext, double eps) {
    if (expected_R <= -1.0) {
        throw ModelError("uip_expected_depreciation: domestic rate must exceed -1, got " +
                         to_shortest(expected_R));
    }
    if (expected_R_ext <= -1.0) {
        throw ModelError("uip_expected_depreciation: external rate must exceed -1, got " +
                         to_shortest(expected_R_ext));
    }
    return std::log1p(expected_R) - std::log1p(expected_R_ext) + eps;
}

SOEResult evaluate_soe_path(const SOEParams& params, const ExternalPath& path) {
    validate_soe(params);
    if (path.empty()) {
        throw ConfigError("soe: external path is empty");
    }

    SOEResult out;
    const std::size_t n = path.size();
    out.exchange_rate.resize(n);
    out.price_level.resize(n);
    out.inflation.resize(n);
    out.expected_depreciation.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const ExternalPoint& pt = path[i];
        if (pt.period != static_cast<int>(i)) {
            throw ConfigError("soe: external points must cover consecutive periods from 0; "
                              "entry " +
                              std::to_string(i) + " has period " + std::to_string(pt.period));
        }
        if (!(pt.external_price > 0.0)) {
            throw ConfigError(at_period(pt.period) + "external price must be positive, got " +
                              to_shortest(pt.external_price));
        }
        if (pt.external_inflation <= -1.0) {
            throw ConfigError(at_period(pt.period) +
                              "external inflation must exceed -1, got " +
                              to_shortest(pt.external_inflation));
        }
        if (!std::isfinite(pt.u)) {
            throw ConfigError(at_period(pt.period) + "u must be finite");
        }

        double g0hat = 0.0;
        const bool has_uip = pt.expected_R.has_value() && pt.expected_R_ext.has_value();
        if (pt.gamma0_hat.has_value()) {
            g0hat = *pt.gamma0_hat;
            if (pt.expected_R.has_value() || pt.expected_R_ext.has_value()) {
                out.warnings.push_back(at_period(pt.period) +
                                       "both gamma0_hat and interest-parity inputs given; "
                                       "using gamma0_hat directly");
            }
        } else if (has_uip) {
            try {
                g0hat = uip_expected_depreciation(*pt.expected_R, *pt.expected_R_ext,
                                                  pt.uip_eps.value_or(0.0));
            } catch (const ModelError& e) {
                throw ConfigError(at_period(pt.period) + e.what());
            }
        } else {
            throw ConfigError(at_period(pt.period) +
                              "expected depreciation is undetermined: give gamma0_hat or "
                              "both expected_R and expected_R_ext");
        }

        const double du = i == 0 ? 0.0 : pt.u - path[i - 1].u;
        out.expected_depreciation[i] = g0hat;
        out.exchange_rate[i] = exchange_rate(params, pt.u);
        out.price_level[i] = soe_price_level(params, pt.external_price, pt.u);
        out.inflation[i] = soe_inflation(pt.external_inflation, g0hat, params.gamma1, du);
    }
    return out;
}

}  // namespace irt
