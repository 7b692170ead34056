#include "irtsim.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "irt/engine.hpp"
#include "irt/errors.hpp"
#include "irt/scenario.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Runs fn, translating exceptions into status codes + the thread-local
// message. fn returns the status for the non-throwing path.
template <typename Fn>
irt_status guarded(Fn&& fn) {
    g_last_error.clear();
    try {
        return fn();
    } catch (const irt::ConfigError& e) {
        set_error(e.what());
        return IRT_ERROR_CONFIG;
    } catch (const irt::ModelError& e) {
        set_error(e.what());
        return IRT_ERROR_RUNTIME;
    } catch (const std::exception& e) {
        set_error(e.what());
        return IRT_ERROR_RUNTIME;
    } catch (...) {
        set_error("unknown failure");
        return IRT_ERROR_RUNTIME;
    }
}

irt_status argument_error(const std::string& message) {
    set_error(message);
    return IRT_ERROR_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) {
        std::memcpy(out, s.c_str(), s.size() + 1);
    }
    return out;
}

}  // namespace

struct irt_scenario {
    irt::ScenarioConfig config;
};

struct irt_run {
    irt::RunArtifacts artifacts;
    // Backing storage for the scalar NK solution exposed as length-1 series.
    std::vector<double> nk_pi, nk_x, nk_R;
};

extern "C" {

const char* irt_version(void) { return "1.0.0"; }

const char* irt_last_error(void) { return g_last_error.c_str(); }

irt_status irt_scenario_parse(const char* text, irt_scenario** out) {
    if (text == nullptr || out == nullptr) {
        return argument_error("irt_scenario_parse: text and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        auto* handle = new irt_scenario{irt::parse_scenario(text)};
        *out = handle;
        return IRT_OK;
    });
}

irt_status irt_scenario_parse_file(const char* path, irt_scenario** out) {
    if (path == nullptr || out == nullptr) {
        return argument_error("irt_scenario_parse_file: path and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        auto* handle = new irt_scenario{irt::parse_scenario_file(path)};
        *out = handle;
        return IRT_OK;
    });
}

irt_status irt_scenario_serialize(const irt_scenario* scenario, char** out) {
    if (scenario == nullptr || out == nullptr) {
        return argument_error("irt_scenario_serialize: scenario and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        const std::string text = irt::serialize_scenario(scenario->config);
        *out = dup_string(text);
        if (*out == nullptr) {
            set_error("irt_scenario_serialize: out of memory");
            return IRT_ERROR_RUNTIME;
        }
        return IRT_OK;
    });
}

void irt_scenario_free(irt_scenario* scenario) { delete scenario; }

irt_status irt_run_scenario(const irt_scenario* scenario, const char* out_dir,
                            int write_svg, irt_run** out) {
    if (scenario == nullptr || out == nullptr) {
        return argument_error("irt_run_scenario: scenario and out must not be NULL");
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<irt_run>();
        handle->artifacts =
            out_dir == nullptr
                ? irt::run_scenario(scenario->config)
                : irt::run_scenario_to_dir(scenario->config, out_dir, write_svg != 0);
        if (handle->artifacts.nk) {
            handle->nk_pi = {handle->artifacts.nk->pi};
            handle->nk_x = {handle->artifacts.nk->x};
            handle->nk_R = {handle->artifacts.nk->R};
        }
        *out = handle.release();
        return IRT_OK;
    });
}

irt_status irt_run_series(const irt_run* run, const char* block, const char* column,
                          const double** data, size_t* len) {
    if (run == nullptr || block == nullptr || column == nullptr || data == nullptr ||
        len == nullptr) {
        return argument_error("irt_run_series: all arguments must be non-NULL");
    }
    *data = nullptr;
    *len = 0;
    const std::string b = block;
    const std::string c = column;
    const std::vector<double>* series = nullptr;
    if (b == "sticky") {
        const irt::SimulationResult& s = run->artifacts.sticky;
        if (c == "real_price") series = &s.real_price;
        else if (c == "nominal_price") series = &s.nominal_price;
        else if (c == "inflation") series = &s.inflation;
        else if (c == "output_gap") series = &s.output_gap;
        else if (c == "real_output") series = &s.real_output;
        else if (c == "policy_rate") series = &s.policy_rate;
        else if (c == "premium") series = &s.premium;
        else if (c == "speed_q") series = &s.speed;
        else if (c == "money_supply") series = &s.money;
    } else if (b == "nk") {
        if (!run->artifacts.nk) {
            return argument_error("irt_run_series: block 'nk' was not produced by this run");
        }
        if (c == "pi") series = &run->nk_pi;
        else if (c == "x") series = &run->nk_x;
        else if (c == "R") series = &run->nk_R;
    } else if (b == "soe") {
        if (!run->artifacts.soe) {
            return argument_error("irt_run_series: block 'soe' was not produced by this run");
        }
        const irt::SOEResult& s = *run->artifacts.soe;
        if (c == "exchange_rate") series = &s.exchange_rate;
        else if (c == "price_level") series = &s.price_level;
        else if (c == "inflation") series = &s.inflation;
        else if (c == "expected_depreciation") series = &s.expected_depreciation;
    } else if (b == "forecast") {
        if (!run->artifacts.forecast) {
            return argument_error(
                "irt_run_series: block 'forecast' was not produced by this run");
        }
        const irt::HorizonForecast& f = *run->artifacts.forecast;
        if (c == "money") series = &f.money_path;
        else if (c == "demand") series = &f.demand_path;
        else if (c == "price") series = &f.price_path;
        else if (c == "inflation") series = &f.inflation_path;
    } else {
        return argument_error("irt_run_series: unknown block '" + b + "'");
    }
    if (series == nullptr) {
        return argument_error("irt_run_series: unknown column '" + c + "' in block '" + b +
                              "'");
    }
    *data = series->data();
    *len = series->size();
    g_last_error.clear();
    return IRT_OK;
}

size_t irt_run_warning_count(const irt_run* run) {
    return run == nullptr ? 0 : run->artifacts.warnings.size();
}

const char* irt_run_warning(const irt_run* run, size_t index) {
    if (run == nullptr || index >= run->artifacts.warnings.size()) {
        return nullptr;
    }
    return run->artifacts.warnings[index].c_str();
}

void irt_run_free(irt_run* run) { delete run; }

irt_status irt_compare_dirs(const char* baseline_dir, const char* alt_dir,
                            const char* out_dir) {
    if (baseline_dir == nullptr || alt_dir == nullptr || out_dir == nullptr) {
        return argument_error("irt_compare_dirs: all directories must be non-NULL");
    }
    return guarded([&] {
        irt::compare_dirs(baseline_dir, alt_dir, out_dir);
        return IRT_OK;
    });
}

irt_status irt_preset_execute(const char* preset, const char* out_dir) {
    if (preset == nullptr || out_dir == nullptr) {
        return argument_error("irt_preset_execute: preset and out_dir must be non-NULL");
    }
    return guarded([&] {
        irt::execute_preset(preset, out_dir);
        return IRT_OK;
    });
}

void irt_string_free(char* s) { std::free(s); }

}  // extern "C"
