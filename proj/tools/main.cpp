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

// Command line front end. Everything goes through the public C API; this
// file only parses flags, moves strings to disk, and maps statuses to exit
// codes (0 ok, 1 infeasible scenario, 2 config/usage error, 3 oracle
// mismatch, 4 internal).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sealte.h"

namespace {

struct ScenarioDeleter {
    void operator()(sealte_scenario *s) const { sealte_scenario_free(s); }
};
struct ResultDeleter {
    void operator()(sealte_result *r) const { sealte_result_free(r); }
};
struct ReportDeleter {
    void operator()(sealte_report *r) const { sealte_report_free(r); }
};
using ScenarioPtr = std::unique_ptr<sealte_scenario, ScenarioDeleter>;
using ResultPtr = std::unique_ptr<sealte_result, ResultDeleter>;
using ReportPtr = std::unique_ptr<sealte_report, ReportDeleter>;

// Owned C string from the library.
struct CStr {
    char *ptr = nullptr;
    ~CStr() { sealte_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

int exit_code(sealte_status status) {
    switch (status) {
        case SEALTE_OK: return 0;
        case SEALTE_ERR_INFEASIBLE: return 1;
        case SEALTE_ERR_CONFIG: return 2;
        case SEALTE_ERR_ORACLE_MISMATCH: return 3;
        case SEALTE_ERR_INVALID: return 2;
        case SEALTE_ERR_INTERNAL: return 4;
    }
    return 4;
}

int fail(sealte_status status, const std::string &context) {
    std::cerr << "sealte: " << context << ": " << sealte_status_name(status) << " ("
              << sealte_last_error() << ")\n";
    return exit_code(status);
}

bool parse_int_list(const std::string &text, std::vector<int> &out) {
    out.clear();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) return false;
            out.push_back(value);
        } catch (...) {
            return false;
        }
    }
    return !out.empty();
}

bool parse_methods(const std::string &text, std::vector<sealte_method> &out) {
    bool selected[3] = {false, false, false};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all") {
            selected[0] = selected[1] = selected[2] = true;
        } else if (item == "maxmin") {
            selected[0] = true;
        } else if (item == "roundrobin") {
            selected[1] = true;
        } else if (item == "opportunistic") {
            selected[2] = true;
        } else {
            return false;
        }
    }
    out.clear();
    if (selected[0]) out.push_back(SEALTE_METHOD_MAXMIN);
    if (selected[1]) out.push_back(SEALTE_METHOD_ROUND_ROBIN);
    if (selected[2]) out.push_back(SEALTE_METHOD_OPPORTUNISTIC);
    return !out.empty();
}

const char *method_flag_name(sealte_method m) {
    switch (m) {
        case SEALTE_METHOD_MAXMIN: return "maxmin";
        case SEALTE_METHOD_ROUND_ROBIN: return "roundrobin";
        case SEALTE_METHOD_OPPORTUNISTIC: return "opportunistic";
    }
    return "?";
}

bool write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"LTE-over-sea downlink resource block allocation simulator"};

    std::string mode = "single";
    std::string ships_text;
    std::string methods_text = "all";
    std::string model_text = "3ray";
    std::string noise_mode;
    std::string config_path;
    std::string out_dir = ".";
    bool oracle_flag = false;
    double d_min = 100.0, d_max = 5000.0;
    int points = 500;
    std::string spacing = "linear";

    app.add_option("--mode", mode, "single, sweep, or pathloss-curve")
        ->check(CLI::IsMember({"single", "sweep", "pathloss-curve"}));
    app.add_option("--ships", ships_text,
                   "ship count (single) or comma list of counts (sweep; default 4,6,8,10,12)");
    app.add_option("--methods", methods_text,
                   "comma subset of maxmin,roundrobin,opportunistic, or 'all'");
    app.add_option("--model", model_text, "path loss model")
        ->check(CLI::IsMember({"2ray", "2raymod", "3ray"}));
    app.add_option("--noise-mode", noise_mode, "thermal or unit (overrides config)")
        ->check(CLI::IsMember({"thermal", "unit"}));
    app.add_option("--config", config_path,
                   "JSON config file (falls back to $SEALTE_CONFIG); flags override config "
                   "values, which override built-in defaults");
    app.add_option("--out", out_dir, "output directory");
    app.add_flag("--oracle-check", oracle_flag,
                 "verify the max-min result against the brute-force oracle (single mode)");
    app.add_option("--d-min", d_min, "curve mode: smallest distance in meters");
    app.add_option("--d-max", d_max, "curve mode: largest distance in meters");
    app.add_option("--points", points, "curve mode: number of grid points");
    app.add_option("--spacing", spacing, "curve mode: linear or log grid")
        ->check(CLI::IsMember({"linear", "log"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // Scenario: config file, else $SEALTE_CONFIG, else defaults.
    if (config_path.empty()) {
        if (const char *env = std::getenv("SEALTE_CONFIG"); env && *env) config_path = env;
    }
    ScenarioPtr scenario;
    {
        sealte_scenario *raw = nullptr;
        const sealte_status st = config_path.empty() ? sealte_scenario_parse("{}", &raw)
                                                     : sealte_scenario_load(config_path.c_str(), &raw);
        if (st != SEALTE_OK) return fail(st, "loading scenario");
        scenario.reset(raw);
    }
    if (const char *warnings = sealte_scenario_warnings(scenario.get()); warnings && *warnings)
        std::cerr << "sealte: config warnings:\n" << warnings << "\n";

    if (!noise_mode.empty()) {
        const std::string fragment = "{\"noise_mode\":\"" + noise_mode + "\"}";
        const sealte_status st = sealte_scenario_override_json(scenario.get(), fragment.c_str());
        if (st != SEALTE_OK) return fail(st, "applying --noise-mode");
    }

    std::vector<sealte_method> methods;
    if (!parse_methods(methods_text, methods)) {
        std::cerr << "sealte: --methods must be a comma subset of "
                     "maxmin,roundrobin,opportunistic or 'all'\n";
        return 2;
    }

    sealte_model model = SEALTE_MODEL_3RAY;
    if (model_text == "2ray") model = SEALTE_MODEL_2RAY;
    if (model_text == "2raymod") model = SEALTE_MODEL_2RAY_MOD;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const std::filesystem::path out(out_dir);

    if (mode == "pathloss-curve") {
        const bool log_spaced = spacing == "log";
        CStr csv;
        const sealte_status st = sealte_pathloss_curve_csv(scenario.get(), d_min, d_max, points,
                                                           log_spaced ? 1 : 0, &csv.ptr);
        if (st != SEALTE_OK) return fail(st, "computing path loss curve");
        const auto path = out / "pathloss_curve.csv";
        if (!write_file(path, csv.str())) {
            std::cerr << "sealte: cannot write " << path << "\n";
            return 2;
        }
        std::cout << "wrote " << path.string() << " (" << points << " points)\n";
        return 0;
    }

    if (mode == "sweep") {
        std::vector<int> counts = {4, 6, 8, 10, 12};
        if (!ships_text.empty() && !parse_int_list(ships_text, counts)) {
            std::cerr << "sealte: --ships must be a comma list of integers\n";
            return 2;
        }
        ReportPtr report;
        {
            sealte_report *raw = nullptr;
            const sealte_status st =
                sealte_sweep(scenario.get(), counts.data(), static_cast<int>(counts.size()),
                             model, methods.data(), static_cast<int>(methods.size()), &raw);
            if (st != SEALTE_OK) return fail(st, "running sweep");
            report.reset(raw);
        }
        CStr fairness, per_user;
        if (sealte_report_fairness_csv(report.get(), &fairness.ptr) != SEALTE_OK ||
            sealte_report_per_user_csv(report.get(), &per_user.ptr) != SEALTE_OK)
            return fail(SEALTE_ERR_INTERNAL, "rendering report");
        const auto fairness_path = out / "fairness.csv";
        const auto per_user_path = out / "per_user.csv";
        if (!write_file(fairness_path, fairness.str()) ||
            !write_file(per_user_path, per_user.str())) {
            std::cerr << "sealte: cannot write report files under " << out << "\n";
            return 2;
        }
        std::cout << "wrote " << fairness_path.string() << " ("
                  << counts.size() * methods.size() << " rows)\n";
        std::cout << "wrote " << per_user_path.string() << "\n";
        return 0;
    }

    // single
    std::vector<int> counts;
    if (!ships_text.empty()) {
        if (!parse_int_list(ships_text, counts) || counts.size() != 1) {
            std::cerr << "sealte: single mode takes one --ships value\n";
            return 2;
        }
        const std::string fragment = "{\"num_ships\":" + std::to_string(counts.front()) + "}";
        const sealte_status st = sealte_scenario_override_json(scenario.get(), fragment.c_str());
        if (st != SEALTE_OK) return fail(st, "applying --ships");
    }
    const int num_ships = sealte_scenario_num_ships(scenario.get());

    for (sealte_method method : methods) {
        ResultPtr result;
        {
            sealte_result *raw = nullptr;
            const sealte_status st = sealte_solve(scenario.get(), model, method, &raw);
            if (st != SEALTE_OK)
                return fail(st, std::string("solving ") + method_flag_name(method));
            result.reset(raw);
        }
        CStr json;
        if (sealte_result_to_json(result.get(), &json.ptr) != SEALTE_OK)
            return fail(SEALTE_ERR_INTERNAL, "rendering result");
        const auto path = out / (std::string("result_") + method_flag_name(method) + ".json");
        if (!write_file(path, json.str())) {
            std::cerr << "sealte: cannot write " << path << "\n";
            return 2;
        }
        char line[160];
        std::snprintf(line, sizeof line, "%-13s phi=%lld bps  jain=%.6f  -> %s\n",
                      method_flag_name(method),
                      static_cast<long long>(sealte_result_phi_bps(result.get())),
                      sealte_result_jain(result.get()), path.string().c_str());
        std::cout << line;
    }

    // Per-user CSV via a one-density report over the same methods.
    {
        ReportPtr report;
        sealte_report *raw = nullptr;
        const sealte_status st = sealte_sweep(scenario.get(), &num_ships, 1, model,
                                              methods.data(), static_cast<int>(methods.size()),
                                              &raw);
        if (st != SEALTE_OK) return fail(st, "building per-user table");
        report.reset(raw);
        CStr per_user;
        if (sealte_report_per_user_csv(report.get(), &per_user.ptr) != SEALTE_OK)
            return fail(SEALTE_ERR_INTERNAL, "rendering per-user table");
        const auto path = out / "per_user.csv";
        if (!write_file(path, per_user.str())) {
            std::cerr << "sealte: cannot write " << path << "\n";
            return 2;
        }
        std::cout << "wrote " << path.string() << "\n";
    }

    if (oracle_flag) {
        const sealte_status st = sealte_oracle_check(scenario.get(), model);
        if (st == SEALTE_OK) {
            std::cout << "oracle check passed\n";
        } else if (st == SEALTE_ERR_INVALID) {
            std::cerr << "sealte: oracle check skipped: " << sealte_last_error() << "\n";
        } else {
            return fail(st, "oracle check");
        }
    }
    return 0;
}
