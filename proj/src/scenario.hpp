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

#ifndef SEALTE_SCENARIO_HPP
#define SEALTE_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sealte {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// x spans the strait, y runs along it, z is height above sea level.
struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct EnodeB {
    int id = 0;  // 1-based
    Position pos;
    double tx_power_dbm = 43.0;
    double cable_loss_db = 3.0;
    int num_rbs = 25;
};

struct Ship {
    int id = 0;  // 1-based
    Position pos;
};

enum class NoiseMode { thermal, unit };

// All knobs the config file can set; defaults reproduce the reference
// simulation parameters (2750 MHz, 25 RBs, 2x2 MIMO, 7 symbols/slot, ...).
struct ScenarioConfig {
    int num_ships = 8;
    int num_enodebs = 4;  // prefix of the four canonical port positions
    double carrier_freq_hz = 2750e6;
    double duct_height_m = 25.0;
    double tx_power_dbm = 43.0;
    double cable_loss_db = 3.0;
    int num_rbs = 25;
    double enodeb_height_m = 20.0;
    double ship_height_m = 3.0;
    NoiseMode noise_mode = NoiseMode::thermal;
    std::optional<double> noise_power_mw;  // explicit override of the mode preset
    int mimo_streams = 2;
    int symbols_per_slot = 7;
    std::int64_t demand_bps = 0;  // uniform per-user demand
};

struct Scenario {
    std::vector<EnodeB> enodebs;
    std::vector<Ship> ships;
    double carrier_freq_hz = 2750e6;
    double duct_height_m = 25.0;
    double noise_power_mw = 1.0;  // linear milliwatts
    int mimo_streams = 2;
    int symbols_per_slot = 7;
    int subcarriers_per_rb = 12;

    double wavelength_m() const { return kSpeedOfLight / carrier_freq_hz; }
};

// Thermal noise floor over one 180 kHz resource block, in linear milliwatts.
double thermal_noise_rb_mw();

// Builds the canonical two-port strait: ports on y=0 and y=3700 m with
// eNodeBs at x=-250 and x=+250 on each, two sea lanes at x=-175 and x=+175.
// Odd-id ships sail lane 1, even-id ships lane 2; the k-th of the m ships in
// a lane sits at y = 3700*k/(m+1). Throws Error(config) on invalid overrides.
Scenario build_bosphorus(int num_ships, const ScenarioConfig &overrides = {});

// Parses the JSON config document. Unknown keys are appended to *warnings
// (when given) instead of failing. Throws Error(config) on parse failures,
// wrong types, or out-of-range values, naming the offending field.
ScenarioConfig parse_config(const std::string &json_text,
                            std::vector<std::string> *warnings = nullptr);

// parse_config on top of an existing config: only keys present in the
// fragment are changed.
ScenarioConfig merge_config(const ScenarioConfig &base, const std::string &json_text,
                            std::vector<std::string> *warnings = nullptr);

// Reads and parses a config file, then builds the scenario it describes.
Scenario load_config(const std::string &path, std::vector<std::string> *warnings = nullptr);

}  // namespace sealte

#endif
