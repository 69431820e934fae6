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

#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace sealte {

namespace {

// Canonical strait geometry, in meters.
constexpr double kStraitLength = 3700.0;
constexpr double kEnodebOffsetX = 250.0;  // half of the 500 m per-port spacing
constexpr double kLaneOffsetX = 175.0;    // half of the 350 m lane separation

constexpr double kEnodebX[4] = {-kEnodebOffsetX, kEnodebOffsetX, -kEnodebOffsetX, kEnodebOffsetX};
constexpr double kEnodebY[4] = {0.0, 0.0, kStraitLength, kStraitLength};

[[noreturn]] void config_error(const std::string &field, const std::string &what) {
    throw Error(ErrorCode::config, "config field '" + field + "': " + what);
}

void require_positive(double v, const char *field) {
    if (!(v > 0.0) || !std::isfinite(v)) config_error(field, "must be a positive finite number");
}

void validate(const ScenarioConfig &c) {
    if (c.num_ships < 1 || c.num_ships > 10000)
        config_error("num_ships", "must be between 1 and 10000");
    if (c.num_enodebs < 1 || c.num_enodebs > 4)
        config_error("num_enodebs", "must be between 1 and 4");
    require_positive(c.carrier_freq_hz, "carrier_freq_hz");
    require_positive(c.duct_height_m, "duct_height_m");
    if (!std::isfinite(c.tx_power_dbm)) config_error("tx_power_dbm", "must be finite");
    if (c.cable_loss_db < 0.0 || !std::isfinite(c.cable_loss_db))
        config_error("cable_loss_db", "must be >= 0");
    if (c.num_rbs < 1 || c.num_rbs > 10000)
        config_error("num_rbs", "must be between 1 and 10000");
    require_positive(c.enodeb_height_m, "enodeb_height_m");
    require_positive(c.ship_height_m, "ship_height_m");
    if (c.noise_power_mw) require_positive(*c.noise_power_mw, "noise_power");
    if (c.mimo_streams < 1 || c.mimo_streams > 8)
        config_error("mimo_streams", "must be between 1 and 8");
    if (c.symbols_per_slot < 1 || c.symbols_per_slot > 14)
        config_error("symbols_per_slot", "must be between 1 and 14");
    if (c.demand_bps < 0 || c.demand_bps > 1000000000000000LL)
        config_error("demand_bps", "must be between 0 and 1e15");
}

}  // namespace

double thermal_noise_rb_mw() {
    // -174 dBm/Hz noise density over the 180 kHz resource block bandwidth.
    const double dbm = -174.0 + 10.0 * std::log10(180e3);
    return std::pow(10.0, dbm / 10.0);
}

Scenario build_bosphorus(int num_ships, const ScenarioConfig &overrides) {
    ScenarioConfig cfg = overrides;
    cfg.num_ships = num_ships;
    validate(cfg);

    Scenario s;
    s.carrier_freq_hz = cfg.carrier_freq_hz;
    s.duct_height_m = cfg.duct_height_m;
    s.mimo_streams = cfg.mimo_streams;
    s.symbols_per_slot = cfg.symbols_per_slot;
    if (cfg.noise_power_mw) {
        s.noise_power_mw = *cfg.noise_power_mw;
    } else {
        s.noise_power_mw = cfg.noise_mode == NoiseMode::unit ? 1.0 : thermal_noise_rb_mw();
    }

    s.enodebs.reserve(cfg.num_enodebs);
    for (int i = 0; i < cfg.num_enodebs; ++i) {
        EnodeB e;
        e.id = i + 1;
        e.pos = {kEnodebX[i], kEnodebY[i], cfg.enodeb_height_m};
        e.tx_power_dbm = cfg.tx_power_dbm;
        e.cable_loss_db = cfg.cable_loss_db;
        e.num_rbs = cfg.num_rbs;
        s.enodebs.push_back(e);
    }

    // Odd ids in lane 1 (x=-175), even ids in lane 2 (x=+175); within a lane
    // ships are equidistant interior points of (0, 3700).
    const int lane1_count = (num_ships + 1) / 2;
    const int lane2_count = num_ships / 2;
    s.ships.reserve(num_ships);
    for (int j = 1; j <= num_ships; ++j) {
        const bool lane1 = (j % 2 == 1);
        const int k = lane1 ? (j + 1) / 2 : j / 2;
        const int m = lane1 ? lane1_count : lane2_count;
        Ship ship;
        ship.id = j;
        ship.pos = {lane1 ? -kLaneOffsetX : kLaneOffsetX,
                    kStraitLength * static_cast<double>(k) / (m + 1), cfg.ship_height_m};
        s.ships.push_back(ship);
    }
    return s;
}

namespace {

using nlohmann::json;

void apply_config_json(ScenarioConfig &cfg, const std::string &json_text,
                       std::vector<std::string> *warnings) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::config, std::string("config parse failure: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::config, "config root must be a JSON object");

    auto number = [](const json &v, const char *field) -> double {
        if (!v.is_number()) config_error(field, "must be a number");
        return v.get<double>();
    };
    auto integer = [](const json &v, const char *field) -> std::int64_t {
        if (!v.is_number_integer()) config_error(field, "must be an integer");
        return v.get<std::int64_t>();
    };

    for (const auto &[key, value] : doc.items()) {
        if (key == "num_ships") {
            cfg.num_ships = static_cast<int>(integer(value, "num_ships"));
        } else if (key == "num_enodebs") {
            cfg.num_enodebs = static_cast<int>(integer(value, "num_enodebs"));
        } else if (key == "carrier_freq_hz") {
            cfg.carrier_freq_hz = number(value, "carrier_freq_hz");
        } else if (key == "duct_height_m") {
            cfg.duct_height_m = number(value, "duct_height_m");
        } else if (key == "tx_power_dbm") {
            cfg.tx_power_dbm = number(value, "tx_power_dbm");
        } else if (key == "cable_loss_db") {
            cfg.cable_loss_db = number(value, "cable_loss_db");
        } else if (key == "num_rbs") {
            cfg.num_rbs = static_cast<int>(integer(value, "num_rbs"));
        } else if (key == "enodeb_height_m") {
            cfg.enodeb_height_m = number(value, "enodeb_height_m");
        } else if (key == "ship_height_m") {
            cfg.ship_height_m = number(value, "ship_height_m");
        } else if (key == "noise_mode") {
            if (!value.is_string()) config_error("noise_mode", "must be a string");
            const std::string mode = value.get<std::string>();
            if (mode == "thermal") {
                cfg.noise_mode = NoiseMode::thermal;
            } else if (mode == "unit") {
                cfg.noise_mode = NoiseMode::unit;
            } else {
                config_error("noise_mode", "must be \"thermal\" or \"unit\"");
            }
        } else if (key == "noise_power") {
            cfg.noise_power_mw = number(value, "noise_power");
        } else if (key == "mimo_streams") {
            cfg.mimo_streams = static_cast<int>(integer(value, "mimo_streams"));
        } else if (key == "symbols_per_slot") {
            cfg.symbols_per_slot = static_cast<int>(integer(value, "symbols_per_slot"));
        } else if (key == "demand_bps") {
            cfg.demand_bps = integer(value, "demand_bps");
        } else if (warnings) {
            warnings->push_back("unknown config key '" + key + "' ignored");
        }
    }
    validate(cfg);
}

}  // namespace

ScenarioConfig parse_config(const std::string &json_text, std::vector<std::string> *warnings) {
    ScenarioConfig cfg;
    apply_config_json(cfg, json_text, warnings);
    return cfg;
}

ScenarioConfig merge_config(const ScenarioConfig &base, const std::string &json_text,
                            std::vector<std::string> *warnings) {
    ScenarioConfig cfg = base;
    apply_config_json(cfg, json_text, warnings);
    return cfg;
}

Scenario load_config(const std::string &path, std::vector<std::string> *warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::config, "cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    const ScenarioConfig cfg = parse_config(text.str(), warnings);
    return build_bosphorus(cfg.num_ships, cfg);
}

}  // namespace sealte
