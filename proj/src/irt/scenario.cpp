#include "irt/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "irt/errors.hpp"
#include "irt/fmt.hpp"

namespace irt {

namespace {

std::string join_path(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

std::string quoted(const std::string& path) { return "'" + path + "'"; }

void require_map(const YAML::Node& n, const std::string& path) {
    if (!n.IsMap()) {
        throw ConfigError(quoted(path) + " must be a mapping of keys to values");
    }
}

void require_sequence(const YAML::Node& n, const std::string& path) {
    if (!n.IsSequence()) {
        throw ConfigError(quoted(path) + " must be a list");
    }
}

void check_allowed(const YAML::Node& map, const std::string& prefix,
                   std::initializer_list<const char*> allowed) {
    for (const auto& kv : map) {
        std::string key;
        try {
            key = kv.first.as<std::string>();
        } catch (const YAML::Exception&) {
            throw ConfigError("non-scalar key under " + quoted(prefix.empty() ? "<root>" : prefix));
        }
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ConfigError("unknown key " + quoted(join_path(prefix, key)));
        }
    }
}

double as_number(const YAML::Node& n, const std::string& path) {
    if (!n.IsScalar()) {
        throw ConfigError(quoted(path) + " must be a number");
    }
    try {
        return n.as<double>();
    } catch (const YAML::Exception&) {
        throw ConfigError(quoted(path) + " must be a number, got '" + n.Scalar() + "'");
    }
}

int as_int(const YAML::Node& n, const std::string& path) {
    if (!n.IsScalar()) {
        throw ConfigError(quoted(path) + " must be an integer");
    }
    try {
        return n.as<int>();
    } catch (const YAML::Exception&) {
        throw ConfigError(quoted(path) + " must be an integer, got '" + n.Scalar() + "'");
    }
}

std::string as_string(const YAML::Node& n, const std::string& path) {
    if (!n.IsScalar()) {
        throw ConfigError(quoted(path) + " must be a string");
    }
    return n.Scalar();
}

void parse_shock_entry(const YAML::Node& n, const std::string& path, ShockSchedule& out) {
    require_map(n, path);
    check_allowed(n, path, {"period", "size"});
    Shock s;
    if (YAML::Node v = n["period"]) {
        s.period = as_int(v, path + ".period");
    } else {
        throw ConfigError(quoted(path + ".period") + " is required");
    }
    if (YAML::Node v = n["size"]) {
        s.size = as_number(v, path + ".size");
    } else {
        throw ConfigError(quoted(path + ".size") + " is required");
    }
    out.events.push_back(s);
}

std::vector<double> parse_number_list(const YAML::Node& n, const std::string& path) {
    require_sequence(n, path);
    std::vector<double> out;
    int i = 0;
    for (const auto& item : n) {
        out.push_back(as_number(item, path + "[" + std::to_string(i) + "]"));
        ++i;
    }
    return out;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError("config syntax error at line " + std::to_string(e.mark.line + 1) +
                          ", column " + std::to_string(e.mark.column + 1) + ": " + e.msg);
    }
    ScenarioConfig cfg;
    if (!root.IsDefined() || root.IsNull()) {
        return cfg;  // empty document: all defaults
    }
    if (!root.IsMap()) {
        throw ConfigError("config root must be a mapping of keys to values");
    }
    check_allowed(root, "",
                  {"name", "horizon", "calibration", "speed_mode", "shock", "policy", "money",
                   "nk", "soe", "forecast"});

    if (YAML::Node n = root["name"]) {
        cfg.name = as_string(n, "name");
    }
    if (YAML::Node n = root["horizon"]) {
        cfg.horizon = as_int(n, "horizon");
    }
    if (cfg.horizon < 2) {
        throw ConfigError("'horizon' must be at least 2, got " + std::to_string(cfg.horizon));
    }

    Calibration& cal = cfg.calibration;
    if (YAML::Node n = root["calibration"]) {
        require_map(n, "calibration");
        check_allowed(n, "calibration", {"pi_star", "r_ss", "b1", "b2", "a1", "a2", "j"});
        if (YAML::Node v = n["pi_star"]) cal.pi_star = as_number(v, "calibration.pi_star");
        if (YAML::Node v = n["r_ss"]) cal.r_ss = as_number(v, "calibration.r_ss");
        if (YAML::Node v = n["b1"]) cal.b1 = as_number(v, "calibration.b1");
        if (YAML::Node v = n["b2"]) cal.b2 = as_number(v, "calibration.b2");
        if (YAML::Node v = n["a1"]) cal.a1 = as_number(v, "calibration.a1");
        if (YAML::Node v = n["a2"]) cal.a2 = as_number(v, "calibration.a2");
        if (YAML::Node v = n["j"]) cal.j = as_number(v, "calibration.j");
    }

    double nk_gamma = 0.1;
    double nk_alpha = 1.0;
    double nk_mu = 1.5;
    if (YAML::Node n = root["nk"]) {
        cfg.nk_enabled = true;
        require_map(n, "nk");
        check_allowed(n, "nk", {"gamma", "alpha", "mu"});
        if (YAML::Node v = n["gamma"]) nk_gamma = as_number(v, "nk.gamma");
        if (YAML::Node v = n["alpha"]) nk_alpha = as_number(v, "nk.alpha");
        if (YAML::Node v = n["mu"]) nk_mu = as_number(v, "nk.mu");
    }
    cal.nk = NKParams::derived(nk_gamma, nk_alpha, nk_mu, cal.r_ss, cal.pi_star);

    if (YAML::Node n = root["money"]) {
        cfg.money_enabled = true;
        require_map(n, "money");
        check_allowed(n, "money", {"eta", "xi", "scale"});
        if (YAML::Node v = n["eta"]) cfg.money.eta = as_number(v, "money.eta");
        if (YAML::Node v = n["xi"]) cfg.money.xi = as_number(v, "money.xi");
        if (YAML::Node v = n["scale"]) cfg.money.scale = as_number(v, "money.scale");
        if (!(cfg.money.eta > 0.0)) {
            throw ConfigError("'money.eta' must be positive, got " + to_shortest(cfg.money.eta));
        }
        if (!(cfg.money.xi > 0.0)) {
            throw ConfigError("'money.xi' must be positive, got " + to_shortest(cfg.money.xi));
        }
        if (!(cfg.money.scale > 0.0)) {
            throw ConfigError("'money.scale' must be positive, got " +
                              to_shortest(cfg.money.scale));
        }
        // xi is the same knob as the calibration's semi-elasticity.
        cal.xi = cfg.money.xi;
    } else {
        cfg.money.xi = cal.xi;
    }

    validate_calibration(cal);  // one diagnostic per violated invariant

    if (YAML::Node n = root["speed_mode"]) {
        const std::string s = as_string(n, "speed_mode");
        if (s == "paper_literal") {
            cfg.speed_mode = SpeedMode::paper_literal;
        } else if (s == "figure_consistent") {
            cfg.speed_mode = SpeedMode::figure_consistent;
        } else {
            throw ConfigError(
                "'speed_mode' must be paper_literal or figure_consistent, got '" + s + "'");
        }
    }

    if (YAML::Node n = root["shock"]) {
        if (n.IsSequence()) {
            int i = 0;
            for (const auto& item : n) {
                parse_shock_entry(item, "shock[" + std::to_string(i) + "]", cfg.shocks);
                ++i;
            }
        } else {
            parse_shock_entry(n, "shock", cfg.shocks);
        }
        int prev = -1;
        int i = 0;
        for (const Shock& s : cfg.shocks.events) {
            const std::string path = "shock[" + std::to_string(i) + "]";
            if (s.period < 0) {
                throw ConfigError(quoted(path + ".period") + " must be non-negative, got " +
                                  std::to_string(s.period));
            }
            if (s.period <= prev) {
                throw ConfigError(quoted(path + ".period") +
                                  " must exceed the previous shock period (periods are "
                                  "strictly increasing)");
            }
            if (s.period >= cfg.horizon) {
                throw ConfigError(quoted(path + ".period") + " must be below 'horizon' (" +
                                  std::to_string(cfg.horizon) + "), got " +
                                  std::to_string(s.period));
            }
            if (!(s.size > -1.0)) {
                throw ConfigError(quoted(path + ".size") + " must exceed -1, got " +
                                  to_shortest(s.size));
            }
            prev = s.period;
            ++i;
        }
    }

    if (YAML::Node n = root["policy"]) {
        require_map(n, "policy");
        check_allowed(n, "policy", {"mode", "explicit"});
        if (YAML::Node v = n["mode"]) {
            const std::string s = as_string(v, "policy.mode");
            if (s == "constant") {
                cfg.policy.mode = PolicyConfig::Mode::constant;
            } else if (s == "explicit") {
                cfg.policy.mode = PolicyConfig::Mode::explicit_path;
            } else if (s == "reactive_figure3") {
                cfg.policy.mode = PolicyConfig::Mode::reactive_figure3;
            } else {
                throw ConfigError(
                    "'policy.mode' must be constant, explicit or reactive_figure3, got '" + s +
                    "'");
            }
        }
        if (YAML::Node v = n["explicit"]) {
            if (cfg.policy.mode != PolicyConfig::Mode::explicit_path) {
                throw ConfigError("'policy.explicit' requires policy.mode = explicit");
            }
            require_sequence(v, "policy.explicit");
            int i = 0;
            for (const auto& item : v) {
                const std::string path = "policy.explicit[" + std::to_string(i) + "]";
                require_map(item, path);
                check_allowed(item, path, {"period", "rate"});
                RatePoint pt;
                if (YAML::Node f = item["period"]) {
                    pt.period = as_int(f, path + ".period");
                } else {
                    throw ConfigError(quoted(path + ".period") + " is required");
                }
                if (YAML::Node f = item["rate"]) {
                    pt.rate = as_number(f, path + ".rate");
                } else {
                    throw ConfigError(quoted(path + ".rate") + " is required");
                }
                cfg.policy.points.push_back(pt);
                ++i;
            }
        }
        int prev = -1;
        int i = 0;
        for (const RatePoint& pt : cfg.policy.points) {
            const std::string path = "policy.explicit[" + std::to_string(i) + "]";
            if (pt.period < 0) {
                throw ConfigError(quoted(path + ".period") + " must be non-negative, got " +
                                  std::to_string(pt.period));
            }
            if (pt.period <= prev) {
                throw ConfigError(quoted(path + ".period") +
                                  " must exceed the previous policy period (periods are "
                                  "strictly increasing)");
            }
            if (pt.period >= cfg.horizon) {
                throw ConfigError(quoted(path + ".period") + " must be below 'horizon' (" +
                                  std::to_string(cfg.horizon) + "), got " +
                                  std::to_string(pt.period));
            }
            if (!(pt.rate > -1.0)) {
                throw ConfigError(quoted(path + ".rate") + " must exceed -1, got " +
                                  to_shortest(pt.rate));
            }
            prev = pt.period;
            ++i;
        }
        if (cfg.policy.mode == PolicyConfig::Mode::reactive_figure3 && cfg.horizon <= 29) {
            throw ConfigError("'policy.mode' reactive_figure3 references periods up to 29 and "
                              "needs 'horizon' above 29, got " +
                              std::to_string(cfg.horizon));
        }
    }

    if (YAML::Node n = root["soe"]) {
        cfg.soe_enabled = true;
        require_map(n, "soe");
        check_allowed(n, "soe", {"lambda", "gamma0", "gamma1", "external"});
        for (const char* key : {"lambda", "gamma0", "gamma1", "external"}) {
            if (!n[key]) {
                throw ConfigError(quoted(std::string("soe.") + key) +
                                  " is required when the soe block is enabled");
            }
        }
        cfg.soe.params.lambda = as_number(n["lambda"], "soe.lambda");
        cfg.soe.params.gamma0 = as_number(n["gamma0"], "soe.gamma0");
        cfg.soe.params.gamma1 = as_number(n["gamma1"], "soe.gamma1");
        validate_soe(cfg.soe.params);

        const YAML::Node ext = n["external"];
        require_sequence(ext, "soe.external");
        int i = 0;
        for (const auto& item : ext) {
            const std::string path = "soe.external[" + std::to_string(i) + "]";
            require_map(item, path);
            check_allowed(item, path,
                          {"period", "external_price", "external_inflation", "u", "gamma0_hat",
                           "expected_R", "expected_R_ext", "uip_eps"});
            ExternalPoint pt;
            for (const char* key : {"period", "external_price", "external_inflation", "u"}) {
                if (!item[key]) {
                    throw ConfigError(quoted(path + "." + key) + " is required");
                }
            }
            pt.period = as_int(item["period"], path + ".period");
            pt.external_price = as_number(item["external_price"], path + ".external_price");
            pt.external_inflation =
                as_number(item["external_inflation"], path + ".external_inflation");
            pt.u = as_number(item["u"], path + ".u");
            if (YAML::Node f = item["gamma0_hat"]) {
                pt.gamma0_hat = as_number(f, path + ".gamma0_hat");
            }
            if (YAML::Node f = item["expected_R"]) {
                pt.expected_R = as_number(f, path + ".expected_R");
            }
            if (YAML::Node f = item["expected_R_ext"]) {
                pt.expected_R_ext = as_number(f, path + ".expected_R_ext");
            }
            if (YAML::Node f = item["uip_eps"]) {
                pt.uip_eps = as_number(f, path + ".uip_eps");
            }
            if (pt.period != i) {
                throw ConfigError(quoted(path + ".period") +
                                  " must be " + std::to_string(i) +
                                  " (external points cover consecutive periods from 0)");
            }
            if (!(pt.external_price > 0.0)) {
                throw ConfigError(quoted(path + ".external_price") +
                                  " must be positive, got " + to_shortest(pt.external_price));
            }
            cfg.soe.external.push_back(pt);
            ++i;
        }
        if (cfg.soe.external.empty()) {
            throw ConfigError("'soe.external' must list at least one period");
        }
    }

    if (YAML::Node n = root["forecast"]) {
        cfg.forecast_enabled = true;
        require_map(n, "forecast");
        check_allowed(n, "forecast", {"money_path", "demand_path"});
        for (const char* key : {"money_path", "demand_path"}) {
            if (!n[key]) {
                throw ConfigError(quoted(std::string("forecast.") + key) +
                                  " is required when the forecast block is enabled");
            }
        }
        cfg.forecast.money_path = parse_number_list(n["money_path"], "forecast.money_path");
        cfg.forecast.demand_path = parse_number_list(n["demand_path"], "forecast.demand_path");
        if (cfg.forecast.money_path.size() < 2) {
            throw ConfigError("'forecast.money_path' needs at least two entries, got " +
                              std::to_string(cfg.forecast.money_path.size()));
        }
        if (cfg.forecast.demand_path.size() != cfg.forecast.money_path.size()) {
            throw ConfigError("'forecast.demand_path' must match the length of "
                              "'forecast.money_path' (" +
                              std::to_string(cfg.forecast.money_path.size()) + " vs " +
                              std::to_string(cfg.forecast.demand_path.size()) + ")");
        }
        for (std::size_t k = 0; k < cfg.forecast.money_path.size(); ++k) {
            if (!(cfg.forecast.money_path[k] > 0.0)) {
                throw ConfigError("'forecast.money_path[" + std::to_string(k) +
                                  "]' must be positive, got " +
                                  to_shortest(cfg.forecast.money_path[k]));
            }
            if (!(cfg.forecast.demand_path[k] > 0.0)) {
                throw ConfigError("'forecast.demand_path[" + std::to_string(k) +
                                  "]' must be positive, got " +
                                  to_shortest(cfg.forecast.demand_path[k]));
            }
        }
    }

    return cfg;
}

ScenarioConfig parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::string speed_mode_name(SpeedMode mode) {
    return mode == SpeedMode::paper_literal ? "paper_literal" : "figure_consistent";
}

std::string policy_mode_name(PolicyConfig::Mode mode) {
    switch (mode) {
        case PolicyConfig::Mode::constant:
            return "constant";
        case PolicyConfig::Mode::explicit_path:
            return "explicit";
        case PolicyConfig::Mode::reactive_figure3:
            return "reactive_figure3";
    }
    return "constant";
}

std::string serialize_scenario(const ScenarioConfig& c) {
    std::string s;
    s += "name: " + yaml_quote(c.name) + "\n";
    s += "horizon: " + std::to_string(c.horizon) + "\n";
    s += "speed_mode: " + speed_mode_name(c.speed_mode) + "\n";
    const Calibration& cal = c.calibration;
    s += "calibration:\n";
    s += "  pi_star: " + to_shortest(cal.pi_star) + "\n";
    s += "  r_ss: " + to_shortest(cal.r_ss) + "\n";
    s += "  b1: " + to_shortest(cal.b1) + "\n";
    s += "  b2: " + to_shortest(cal.b2) + "\n";
    s += "  a1: " + to_shortest(cal.a1) + "\n";
    s += "  a2: " + to_shortest(cal.a2) + "\n";
    s += "  j: " + to_shortest(cal.j) + "\n";
    if (!c.shocks.events.empty()) {
        s += "shock:\n";
        for (const Shock& e : c.shocks.events) {
            s += "  - period: " + std::to_string(e.period) + "\n";
            s += "    size: " + to_shortest(e.size) + "\n";
        }
    }
    s += "policy:\n";
    s += "  mode: " + policy_mode_name(c.policy.mode) + "\n";
    if (c.policy.mode == PolicyConfig::Mode::explicit_path && !c.policy.points.empty()) {
        s += "  explicit:\n";
        for (const RatePoint& pt : c.policy.points) {
            s += "    - period: " + std::to_string(pt.period) + "\n";
            s += "      rate: " + to_shortest(pt.rate) + "\n";
        }
    }
    if (c.money_enabled) {
        s += "money:\n";
        s += "  eta: " + to_shortest(c.money.eta) + "\n";
        s += "  xi: " + to_shortest(c.money.xi) + "\n";
        s += "  scale: " + to_shortest(c.money.scale) + "\n";
    }
    if (c.nk_enabled) {
        s += "nk:\n";
        s += "  gamma: " + to_shortest(cal.nk.gamma) + "\n";
        s += "  alpha: " + to_shortest(cal.nk.alpha) + "\n";
        s += "  mu: " + to_shortest(cal.nk.mu) + "\n";
    }
    if (c.soe_enabled) {
        s += "soe:\n";
        s += "  lambda: " + to_shortest(c.soe.params.lambda) + "\n";
        s += "  gamma0: " + to_shortest(c.soe.params.gamma0) + "\n";
        s += "  gamma1: " + to_shortest(c.soe.params.gamma1) + "\n";
        s += "  external:\n";
        for (const ExternalPoint& pt : c.soe.external) {
            s += "    - period: " + std::to_string(pt.period) + "\n";
            s += "      external_price: " + to_shortest(pt.external_price) + "\n";
            s += "      external_inflation: " + to_shortest(pt.external_inflation) + "\n";
            s += "      u: " + to_shortest(pt.u) + "\n";
            if (pt.gamma0_hat) {
                s += "      gamma0_hat: " + to_shortest(*pt.gamma0_hat) + "\n";
            }
            if (pt.expected_R) {
                s += "      expected_R: " + to_shortest(*pt.expected_R) + "\n";
            }
            if (pt.expected_R_ext) {
                s += "      expected_R_ext: " + to_shortest(*pt.expected_R_ext) + "\n";
            }
            if (pt.uip_eps) {
                s += "      uip_eps: " + to_shortest(*pt.uip_eps) + "\n";
            }
        }
    }
    if (c.forecast_enabled) {
        s += "forecast:\n";
        s += "  money_path: [";
        for (std::size_t k = 0; k < c.forecast.money_path.size(); ++k) {
            if (k) s += ", ";
            s += to_shortest(c.forecast.money_path[k]);
        }
        s += "]\n";
        s += "  demand_path: [";
        for (std::size_t k = 0; k < c.forecast.demand_path.size(); ++k) {
            if (k) s += ", ";
            s += to_shortest(c.forecast.demand_path[k]);
        }
        s += "]\n";
    }
    return s;
}

PolicyPath resolve_policy(const PolicyConfig& policy) {
    PolicyPath out;
    switch (policy.mode) {
        case PolicyConfig::Mode::constant:
            out.mode = PolicyPath::Mode::constant;
            break;
        case PolicyConfig::Mode::explicit_path:
            out.mode = PolicyPath::Mode::explicit_path;
            out.points = policy.points;
            break;
        case PolicyConfig::Mode::reactive_figure3:
            // 9% the period after the built-in period-20 shock, 0.5 pp less
            // each period through 5%, then back at R_bar (the explicit-path
            // default for unlisted periods).
            out.mode = PolicyPath::Mode::explicit_path;
            for (int k = 0; k <= 8; ++k) {
                out.points.push_back({21 + k, static_cast<double>(90 - 5 * k) / 1000.0});
            }
            break;
    }
    return out;
}

}  // namespace irt
