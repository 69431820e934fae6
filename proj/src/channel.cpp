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

#include "channel.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"

namespace sealte {

namespace {

void require_positive(double v, const char *name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw Error(ErrorCode::invalid_argument,
                    std::string(name) + " must be a positive finite number");
}

// Loss from a linear power gain, capped at the null cap.
double loss_from_gain(double gain) {
    if (!(gain > 0.0)) return kNullCapDb;
    const double loss = -10.0 * std::log10(gain);
    return loss < kNullCapDb ? loss : kNullCapDb;
}

}  // namespace

double fspl_db(double d_m, double wavelength_m) {
    return -20.0 * std::log10(wavelength_m / (4.0 * M_PI * d_m));
}

double pathloss_2ray_db(double d_m, double h_tx_m, double h_rx_m, double system_loss) {
    require_positive(d_m, "d");
    require_positive(h_tx_m, "h_tx");
    require_positive(h_rx_m, "h_rx");
    require_positive(system_loss, "system_loss");
    const double num = h_tx_m * h_rx_m;
    return loss_from_gain(num * num / (d_m * d_m * d_m * d_m * system_loss));
}

double pathloss_2ray_mod_db(double d_m, double h_tx_m, double h_rx_m, double wavelength_m) {
    require_positive(d_m, "d");
    require_positive(h_tx_m, "h_tx");
    require_positive(h_rx_m, "h_rx");
    require_positive(wavelength_m, "wavelength");
    const double direct = wavelength_m / (4.0 * M_PI * d_m);
    const double interference = 2.0 * std::sin(2.0 * M_PI * h_tx_m * h_rx_m / (wavelength_m * d_m));
    return loss_from_gain(direct * direct * interference * interference);
}

double pathloss_3ray_db(double d_m, double h_tx_m, double h_rx_m, double duct_height_m,
                        double wavelength_m) {
    require_positive(d_m, "d");
    require_positive(h_tx_m, "h_tx");
    require_positive(h_rx_m, "h_rx");
    require_positive(duct_height_m, "duct_height");
    require_positive(wavelength_m, "wavelength");
    const double direct = wavelength_m / (4.0 * M_PI * d_m);
    const double delta =
        2.0 * std::sin(2.0 * M_PI * h_tx_m * h_rx_m / (wavelength_m * d_m)) *
        std::sin(2.0 * M_PI * (h_tx_m - duct_height_m) * (duct_height_m - h_rx_m) /
                 (wavelength_m * d_m));
    const double combined = 2.0 * (1.0 + delta);
    return loss_from_gain(direct * direct * combined * combined);
}

double pathloss_db(const PathLoss &model, double d_m, double h_tx_m, double h_rx_m,
                   double duct_height_m, double wavelength_m) {
    switch (model.model) {
        case PathLossModel::two_ray:
            return pathloss_2ray_db(d_m, h_tx_m, h_rx_m, model.system_loss);
        case PathLossModel::two_ray_mod:
            return pathloss_2ray_mod_db(d_m, h_tx_m, h_rx_m, wavelength_m);
        case PathLossModel::three_ray:
            return pathloss_3ray_db(d_m, h_tx_m, h_rx_m, duct_height_m, wavelength_m);
    }
    throw Error(ErrorCode::invalid_argument, "unknown path loss model");
}

double channel_gain(const EnodeB &enodeb, const Ship &ship, const PathLoss &model,
                    const Scenario &scenario) {
    const double dx = enodeb.pos.x - ship.pos.x;
    const double dy = enodeb.pos.y - ship.pos.y;
    const double d = std::hypot(dx, dy);
    const double loss = pathloss_db(model, d, enodeb.pos.z, ship.pos.z, scenario.duct_height_m,
                                    scenario.wavelength_m());
    return std::pow(10.0, -(loss + enodeb.cable_loss_db) / 10.0);
}

double SinrMatrix::db(int i, int j) const { return 10.0 * std::log10(linear(i, j)); }

SinrMatrix sinr_matrix(const Scenario &scenario, const PathLoss &model) {
    const int num_enb = static_cast<int>(scenario.enodebs.size());
    const int num_ships = static_cast<int>(scenario.ships.size());
    SinrMatrix out(num_enb, num_ships);

    std::vector<double> rx_mw(static_cast<size_t>(num_enb) * num_ships);
    for (int i = 0; i < num_enb; ++i) {
        const double power_mw = std::pow(10.0, scenario.enodebs[i].tx_power_dbm / 10.0);
        for (int j = 0; j < num_ships; ++j) {
            rx_mw[static_cast<size_t>(i) * num_ships + j] =
                power_mw * channel_gain(scenario.enodebs[i], scenario.ships[j], model, scenario);
        }
    }
    for (int j = 0; j < num_ships; ++j) {
        double total = scenario.noise_power_mw;
        for (int i = 0; i < num_enb; ++i) total += rx_mw[static_cast<size_t>(i) * num_ships + j];
        for (int i = 0; i < num_enb; ++i) {
            const double wanted = rx_mw[static_cast<size_t>(i) * num_ships + j];
            out.linear(i, j) = wanted / (total - wanted);
        }
    }
    return out;
}

std::string pathloss_curve_csv(const Scenario &scenario, double d_min_m, double d_max_m,
                               int points, bool log_spaced) {
    if (!(d_min_m > 0.0) || !(d_max_m > d_min_m))
        throw Error(ErrorCode::config, "curve range requires 0 < d_min < d_max");
    if (points < 2) throw Error(ErrorCode::config, "curve requires at least 2 points");

    const double h_tx = scenario.enodebs.empty() ? 20.0 : scenario.enodebs.front().pos.z;
    const double h_rx = scenario.ships.empty() ? 3.0 : scenario.ships.front().pos.z;
    const double lambda = scenario.wavelength_m();

    std::string csv = "d_m,L_2ray_db,L_2raymod_db,L_3ray_db\n";
    char line[160];
    for (int k = 0; k < points; ++k) {
        const double frac = static_cast<double>(k) / (points - 1);
        const double d = log_spaced ? d_min_m * std::pow(d_max_m / d_min_m, frac)
                                    : d_min_m + (d_max_m - d_min_m) * frac;
        std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f,%.6f\n", d,
                      pathloss_2ray_db(d, h_tx, h_rx, 1.0),
                      pathloss_2ray_mod_db(d, h_tx, h_rx, lambda),
                      pathloss_3ray_db(d, h_tx, h_rx, scenario.duct_height_m, lambda));
        csv += line;
    }
    return csv;
}

}  // namespace sealte
