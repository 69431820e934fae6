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

#ifndef SEALTE_CHANNEL_HPP
#define SEALTE_CHANNEL_HPP

#include <string>
#include <vector>

#include "scenario.hpp"

namespace sealte {

// At exact multipath nulls the interference terms give infinite dB loss;
// losses are capped here so downstream linear math stays finite.
inline constexpr double kNullCapDb = 200.0;

enum class PathLossModel { two_ray, two_ray_mod, three_ray };

struct PathLoss {
    PathLossModel model = PathLossModel::three_ray;
    double system_loss = 1.0;  // the 2-Ray system loss parameter
};

// Free space path loss -20*log10(lambda / (4*pi*d)), in dB.
double fspl_db(double d_m, double wavelength_m);

// Flat-earth 2-Ray: L = -10*log10((h_tx*h_rx)^2 / (d^4 * I)).
double pathloss_2ray_db(double d_m, double h_tx_m, double h_rx_m, double system_loss);

// Modified 2-Ray with the explicit sea-surface interference term:
//   L = -10*log10((lambda/(4*pi*d))^2 * (2*sin(2*pi*h_tx*h_rx/(lambda*d)))^2)
double pathloss_2ray_mod_db(double d_m, double h_tx_m, double h_rx_m, double wavelength_m);

// 3-Ray: direct ray, sea-surface reflection, and evaporation-duct reflection
// at height h_e:
//   L = -10*log10((lambda/(4*pi*d))^2 * (2*(1+delta))^2)
//   delta = 2*sin(2*pi*h_tx*h_rx/(lambda*d))
//            * sin(2*pi*(h_tx-h_e)*(h_e-h_rx)/(lambda*d))
// The height differences keep their signs (h_tx may sit below the duct).
double pathloss_3ray_db(double d_m, double h_tx_m, double h_rx_m, double duct_height_m,
                        double wavelength_m);

// Dispatch on the selected model.
double pathloss_db(const PathLoss &model, double d_m, double h_tx_m, double h_rx_m,
                   double duct_height_m, double wavelength_m);

// Linear channel gain 10^(-(L + cable_loss)/10) for one link. Distance is
// the horizontal (x, y) separation; heights enter only through the model's
// h_tx / h_rx terms.
double channel_gain(const EnodeB &enodeb, const Ship &ship, const PathLoss &model,
                    const Scenario &scenario);

class SinrMatrix {
public:
    SinrMatrix(int num_enodebs, int num_ships)
        : enodebs_(num_enodebs), ships_(num_ships),
          linear_(static_cast<size_t>(num_enodebs) * num_ships, 0.0) {}

    int num_enodebs() const { return enodebs_; }
    int num_ships() const { return ships_; }
    double &linear(int i, int j) { return linear_[static_cast<size_t>(i) * ships_ + j]; }
    double linear(int i, int j) const { return linear_[static_cast<size_t>(i) * ships_ + j]; }
    double db(int i, int j) const;

private:
    int enodebs_;
    int ships_;
    std::vector<double> linear_;
};

// SINR_ij = P_i*G_ij / (sum_{m != i} P_m*G_mj + sigma^2), with eNodeB powers
// converted from dBm to linear milliwatts. All non-serving eNodeBs are
// assumed transmitting at full power on every RB.
SinrMatrix sinr_matrix(const Scenario &scenario, const PathLoss &model);

// CSV dump of the three loss curves with header
// d_m,L_2ray_db,L_2raymod_db,L_3ray_db on a linear or log-spaced grid.
std::string pathloss_curve_csv(const Scenario &scenario, double d_min_m, double d_max_m,
                               int points, bool log_spaced);

}  // namespace sealte

#endif
