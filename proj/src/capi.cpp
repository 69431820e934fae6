// Copyright 2026 sealte developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sealte.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "driver.hpp"
#include "error.hpp"

struct sealte_scenario {
    sealte::Scenario scenario;
    sealte::ScenarioConfig config;
    std::string warnings;  // newline-joined unknown-key notes
};

struct sealte_result {
    sealte::AllocationResult result;
    sealte::Method method = sealte::Method::maxmin;
    double jain = 0.0;
};

struct sealte_report {
    sealte::ComparisonReport report;
    std::vector<sealte_result> cells;  // row-major [density][method]
    int num_methods = 0;
};

namespace {

thread_local std::string g_last_error;

sealte_status status_of(sealte::ErrorCode code) {
    switch (code) {
        case sealte::ErrorCode::invalid_argument: return SEALTE_ERR_INVALID;
        case sealte::ErrorCode::config: return SEALTE_ERR_CONFIG;
        case sealte::ErrorCode::infeasible: return SEALTE_ERR_INFEASIBLE;
        case sealte::ErrorCode::oracle_mismatch: return SEALTE_ERR_ORACLE_MISMATCH;
        case sealte::ErrorCode::io: return SEALTE_ERR_CONFIG;
    }
    return SEALTE_ERR_INTERNAL;
}

template <typename Fn>
sealte_status guarded(Fn &&fn) noexcept {
    try {
        fn();
        return SEALTE_OK;
    } catch (const sealte::Error &e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return SEALTE_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SEALTE_ERR_INTERNAL;
    }
}

sealte_status invalid(const char *message) noexcept {
    g_last_error = message;
    return SEALTE_ERR_INVALID;
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string join_warnings(const std::vector<std::string> &warnings) {
    std::string joined;
    for (const auto &w : warnings) {
        if (!joined.empty()) joined += '\n';
        joined += w;
    }
    return joined;
}

sealte::PathLoss to_pathloss(sealte_model model) {
    sealte::PathLoss p;
    switch (model) {
        case SEALTE_MODEL_2RAY: p.model = sealte::PathLossModel::two_ray; break;
        case SEALTE_MODEL_2RAY_MOD: p.model = sealte::PathLossModel::two_ray_mod; break;
        case SEALTE_MODEL_3RAY: p.model = sealte::PathLossModel::three_ray; break;
        default:
            throw sealte::Error(sealte::ErrorCode::invalid_argument, "unknown path loss model");
    }
    return p;
}

sealte::Method to_method(sealte_method method) {
    switch (method) {
        case SEALTE_METHOD_MAXMIN: return sealte::Method::maxmin;
        case SEALTE_METHOD_ROUND_ROBIN: return sealte::Method::round_robin;
        case SEALTE_METHOD_OPPORTUNISTIC: return sealte::Method::opportunistic;
        default:
            throw sealte::Error(sealte::ErrorCode::invalid_argument, "unknown method");
    }
}

sealte_method from_method(sealte::Method method) {
    switch (method) {
        case sealte::Method::maxmin: return SEALTE_METHOD_MAXMIN;
        case sealte::Method::round_robin: return SEALTE_METHOD_ROUND_ROBIN;
        case sealte::Method::opportunistic: return SEALTE_METHOD_OPPORTUNISTIC;
    }
    return SEALTE_METHOD_MAXMIN;
}

sealte_result make_result(sealte::AllocationResult r, sealte::Method method) {
    sealte_result out;
    out.jain = sealte::jain_index(r.user_throughput_bps);
    out.result = std::move(r);
    out.method = method;
    return out;
}

bool user_in_range(const sealte_result *result, int user) {
    return user >= 0 && user < static_cast<int>(result->result.user_throughput_bps.size());
}

}  // namespace

extern "C" {

const char *sealte_version(void) { return "1.0.0"; }

const char *sealte_status_name(sealte_status status) {
    switch (status) {
        case SEALTE_OK: return "ok";
        case SEALTE_ERR_INFEASIBLE: return "infeasible";
        case SEALTE_ERR_CONFIG: return "config error";
        case SEALTE_ERR_ORACLE_MISMATCH: return "oracle mismatch";
        case SEALTE_ERR_INVALID: return "invalid argument";
        case SEALTE_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char *sealte_last_error(void) { return g_last_error.c_str(); }

void sealte_string_free(char *s) { std::free(s); }

sealte_status sealte_scenario_create(int num_ships, sealte_scenario **out) {
    if (!out) return invalid("out pointer is null");
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<sealte_scenario>();
        handle->config.num_ships = num_ships;
        handle->scenario = sealte::build_bosphorus(num_ships, handle->config);
        *out = handle.release();
    });
}

sealte_status sealte_scenario_parse(const char *config_json, sealte_scenario **out) {
    if (!out) return invalid("out pointer is null");
    if (!config_json) return invalid("config_json is null");
    *out = nullptr;
    return guarded([&] {
        std::vector<std::string> warnings;
        auto handle = std::make_unique<sealte_scenario>();
        handle->config = sealte::parse_config(config_json, &warnings);
        handle->scenario = sealte::build_bosphorus(handle->config.num_ships, handle->config);
        handle->warnings = join_warnings(warnings);
        *out = handle.release();
    });
}

sealte_status sealte_scenario_load(const char *path, sealte_scenario **out) {
    if (!out) return invalid("out pointer is null");
    if (!path) return invalid("path is null");
    *out = nullptr;
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw sealte::Error(sealte::ErrorCode::config,
                                std::string("cannot open config file '") + path + "'");
        std::ostringstream text;
        text << in.rdbuf();

        std::vector<std::string> warnings;
        auto handle = std::make_unique<sealte_scenario>();
        handle->config = sealte::parse_config(text.str(), &warnings);
        handle->scenario = sealte::build_bosphorus(handle->config.num_ships, handle->config);
        handle->warnings = join_warnings(warnings);
        *out = handle.release();
    });
}

sealte_status sealte_scenario_override_json(sealte_scenario *scenario, const char *config_json) {
    if (!scenario) return invalid("scenario is null");
    if (!config_json) return invalid("config_json is null");
    return guarded([&] {
        std::vector<std::string> warnings;
        const sealte::ScenarioConfig merged =
            sealte::merge_config(scenario->config, config_json, &warnings);
        scenario->scenario = sealte::build_bosphorus(merged.num_ships, merged);
        scenario->config = merged;
        for (const auto &w : warnings) {
            if (!scenario->warnings.empty()) scenario->warnings += '\n';
            scenario->warnings += w;
        }
    });
}

void sealte_scenario_free(sealte_scenario *scenario) { delete scenario; }

int sealte_scenario_num_enodebs(const sealte_scenario *scenario) {
    return scenario ? static_cast<int>(scenario->scenario.enodebs.size()) : 0;
}

int sealte_scenario_num_ships(const sealte_scenario *scenario) {
    return scenario ? static_cast<int>(scenario->scenario.ships.size()) : 0;
}

int sealte_scenario_num_rbs(const sealte_scenario *scenario) {
    return scenario && !scenario->scenario.enodebs.empty()
               ? scenario->scenario.enodebs.front().num_rbs
               : 0;
}

const char *sealte_scenario_warnings(const sealte_scenario *scenario) {
    return scenario ? scenario->warnings.c_str() : "";
}

sealte_status sealte_solve(const sealte_scenario *scenario, sealte_model model,
                           sealte_method method, sealte_result **out) {
    if (!out) return invalid("out pointer is null");
    if (!scenario) return invalid("scenario is null");
    *out = nullptr;
    return guarded([&] {
        const sealte::Method m = to_method(method);
        const sealte::Demand demand = sealte::Demand::uniform(
            static_cast<int>(scenario->scenario.ships.size()), scenario->config.demand_bps);
        sealte::AllocationResult r =
            sealte::run_method(scenario->scenario, to_pathloss(model), m, demand);
        *out = new sealte_result(make_result(std::move(r), m));
    });
}

void sealte_result_free(sealte_result *result) { delete result; }

int sealte_result_num_users(const sealte_result *result) {
    return result ? static_cast<int>(result->result.user_throughput_bps.size()) : 0;
}

int64_t sealte_result_phi_bps(const sealte_result *result) {
    return result ? result->result.phi_bps : -1;
}

double sealte_result_jain(const sealte_result *result) { return result ? result->jain : -1.0; }

int64_t sealte_result_user_throughput_bps(const sealte_result *result, int user) {
    if (!result || !user_in_range(result, user)) return -1;
    return result->result.user_throughput_bps[user];
}

int sealte_result_serving_enodeb(const sealte_result *result, int user) {
    if (!result || !user_in_range(result, user)) return -1;
    return result->result.association.serving[user] + 1;
}

int sealte_result_user_rbs(const sealte_result *result, int user) {
    if (!result || !user_in_range(result, user)) return -1;
    const int serving = result->result.association.serving[user];
    return result->result.allocation.at(serving, user);
}

sealte_status sealte_result_to_json(const sealte_result *result, char **out_json) {
    if (!out_json) return invalid("out pointer is null");
    if (!result) return invalid("result is null");
    *out_json = nullptr;
    return guarded([&] {
        *out_json = copy_string(sealte::allocation_json(result->result, result->method));
        if (!*out_json) throw std::bad_alloc();
    });
}

sealte_status sealte_oracle_check(const sealte_scenario *scenario, sealte_model model) {
    if (!scenario) return invalid("scenario is null");
    return guarded([&] {
        const sealte::Demand demand = sealte::Demand::uniform(
            static_cast<int>(scenario->scenario.ships.size()), scenario->config.demand_bps);
        sealte::oracle_check(scenario->scenario, to_pathloss(model), demand);
    });
}

sealte_status sealte_pathloss_curve_csv(const sealte_scenario *scenario, double d_min_m,
                                        double d_max_m, int points, int log_spaced,
                                        char **out_csv) {
    if (!out_csv) return invalid("out pointer is null");
    if (!scenario) return invalid("scenario is null");
    *out_csv = nullptr;
    return guarded([&] {
        *out_csv = copy_string(sealte::pathloss_curve_csv(scenario->scenario, d_min_m, d_max_m,
                                                          points, log_spaced != 0));
        if (!*out_csv) throw std::bad_alloc();
    });
}

sealte_status sealte_sweep(const sealte_scenario *base, const int *ship_counts, int num_counts,
                           sealte_model model, const sealte_method *methods, int num_methods,
                           sealte_report **out) {
    if (!out) return invalid("out pointer is null");
    if (!base) return invalid("scenario is null");
    if (!ship_counts || num_counts < 1) return invalid("ship_counts is empty");
    if (!methods || num_methods < 1) return invalid("methods is empty");
    *out = nullptr;
    return guarded([&] {
        std::vector<int> counts(ship_counts, ship_counts + num_counts);
        std::vector<sealte::Method> wanted;
        wanted.reserve(num_methods);
        for (int k = 0; k < num_methods; ++k) wanted.push_back(to_method(methods[k]));

        auto handle = std::make_unique<sealte_report>();
        handle->report =
            sealte::run_sweep(base->config, counts, to_pathloss(model), wanted);
        for (const auto &density : handle->report.densities) {
            for (const auto &cell : density.methods) {
                sealte_result view;
                view.result = cell.result;
                view.method = cell.method;
                view.jain = cell.jain;
                handle->cells.push_back(std::move(view));
            }
        }
        handle->num_methods =
            handle->report.densities.empty()
                ? 0
                : static_cast<int>(handle->report.densities.front().methods.size());
        *out = handle.release();
    });
}

void sealte_report_free(sealte_report *report) { delete report; }

int sealte_report_num_densities(const sealte_report *report) {
    return report ? static_cast<int>(report->report.densities.size()) : 0;
}

int sealte_report_num_methods(const sealte_report *report) {
    return report ? report->num_methods : 0;
}

int sealte_report_density_at(const sealte_report *report, int density_index) {
    if (!report || density_index < 0 ||
        density_index >= static_cast<int>(report->report.densities.size()))
        return -1;
    return report->report.densities[density_index].num_ships;
}

sealte_method sealte_report_method_at(const sealte_report *report, int method_index) {
    if (!report || method_index < 0 || method_index >= report->num_methods)
        return SEALTE_METHOD_MAXMIN;
    return from_method(report->report.densities.front().methods[method_index].method);
}

sealte_status sealte_report_result(const sealte_report *report, int density_index,
                                   int method_index, const sealte_result **out_result) {
    if (!out_result) return invalid("out pointer is null");
    *out_result = nullptr;
    if (!report) return invalid("report is null");
    if (density_index < 0 || density_index >= sealte_report_num_densities(report))
        return invalid("density index out of range");
    if (method_index < 0 || method_index >= report->num_methods)
        return invalid("method index out of range");
    *out_result = &report->cells[static_cast<size_t>(density_index) * report->num_methods +
                                 method_index];
    return SEALTE_OK;
}

sealte_status sealte_report_fairness_csv(const sealte_report *report, char **out_csv) {
    if (!out_csv) return invalid("out pointer is null");
    if (!report) return invalid("report is null");
    *out_csv = nullptr;
    return guarded([&] {
        *out_csv = copy_string(sealte::fairness_csv(report->report));
        if (!*out_csv) throw std::bad_alloc();
    });
}

sealte_status sealte_report_per_user_csv(const sealte_report *report, char **out_csv) {
    if (!out_csv) return invalid("out pointer is null");
    if (!report) return invalid("report is null");
    *out_csv = nullptr;
    return guarded([&] {
        *out_csv = copy_string(sealte::per_user_csv(report->report));
        if (!*out_csv) throw std::bad_alloc();
    });
}

sealte_status sealte_mcs_table_csv(char **out_csv) {
    if (!out_csv) return invalid("out pointer is null");
    *out_csv = nullptr;
    return guarded([&] {
        *out_csv = copy_string(sealte::mcs_table_csv());
        if (!*out_csv) throw std::bad_alloc();
    });
}

}  // extern "C"
