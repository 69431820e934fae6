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

#include "linkadapt.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"

namespace sealte {

const char *modulation_name(Modulation m) {
    switch (m) {
        case Modulation::qpsk: return "QPSK";
        case Modulation::qam16: return "16QAM";
        case Modulation::qam64: return "64QAM";
    }
    return "?";
}

const std::array<McsEntry, 15> &mcs_table() {
    using enum Modulation;
    static const std::array<McsEntry, 15> table = {{
        {1, qpsk, 1, 12, -6.5, 15},
        {2, qpsk, 1, 9, -4.0, 23},
        {3, qpsk, 1, 6, -2.6, 38},
        {4, qpsk, 1, 3, -1.0, 60},
        {5, qpsk, 1, 2, 1.0, 88},
        {6, qpsk, 3, 5, 3.0, 118},
        {7, qam16, 1, 3, 6.6, 148},
        {8, qam16, 1, 2, 10.0, 191},
        {9, qam16, 3, 5, 11.4, 241},
        {10, qam64, 1, 2, 11.8, 273},
        {11, qam64, 1, 2, 13.0, 332},
        {12, qam64, 3, 5, 13.8, 390},
        {13, qam64, 3, 4, 15.6, 452},
        {14, qam64, 5, 6, 16.8, 512},
        {15, qam64, 11, 12, 17.6, 555},
    }};
    return table;
}

const McsEntry *select_mcs(double sinr_db) {
    if (!std::isfinite(sinr_db))
        throw Error(ErrorCode::invalid_argument, "SINR must be finite");
    const auto &table = mcs_table();
    const McsEntry *selected = nullptr;
    for (const auto &entry : table) {
        if (sinr_db >= entry.sinr_threshold_db) selected = &entry;
    }
    return selected;
}

std::int64_t rb_throughput_bps(const McsEntry &mcs, const Scenario &scenario) {
    // centibits * 20 = bits/symbol * 2 slots/ms * 1000 ms/s.
    return static_cast<std::int64_t>(mcs.efficiency_centibits) * scenario.subcarriers_per_rb *
           scenario.symbols_per_slot * 20 * scenario.mimo_streams;
}

ThroughputMatrix throughput_matrix(const SinrMatrix &sinr, const Scenario &scenario) {
    ThroughputMatrix out(sinr.num_enodebs(), sinr.num_ships());
    for (int i = 0; i < out.num_enodebs; ++i) {
        for (int j = 0; j < out.num_ships; ++j) {
            const McsEntry *mcs = select_mcs(sinr.db(i, j));
            out.at(i, j) = mcs ? rb_throughput_bps(*mcs, scenario) : 0;
        }
    }
    return out;
}

std::string mcs_table_csv() {
    std::string csv = "mcs,modulation,code_rate,sinr_threshold_db,efficiency_bits_per_symbol\n";
    char line[96];
    for (const auto &e : mcs_table()) {
        std::snprintf(line, sizeof line, "%d,%s,%d/%d,%g,%d.%02d\n", e.index,
                      modulation_name(e.modulation), e.code_rate_num, e.code_rate_den,
                      e.sinr_threshold_db, e.efficiency_centibits / 100,
                      e.efficiency_centibits % 100);
        csv += line;
    }
    return csv;
}

}  // namespace sealte
