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

#ifndef SEALTE_LINKADAPT_HPP
#define SEALTE_LINKADAPT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "channel.hpp"
#include "scenario.hpp"

namespace sealte {

enum class Modulation { qpsk, qam16, qam64 };

const char *modulation_name(Modulation m);

struct McsEntry {
    int index;                 // 1..15
    Modulation modulation;
    int code_rate_num;
    int code_rate_den;
    double sinr_threshold_db;  // entry usable when SINR >= threshold
    int efficiency_centibits;  // bits/symbol * 100, exact

    double efficiency() const { return efficiency_centibits / 100.0; }
};

// The fixed 15-entry modulation-and-coding table, ordered by index.
const std::array<McsEntry, 15> &mcs_table();

// Highest-index entry whose threshold is <= sinr; nullptr when the SINR is
// below the lowest threshold (no link possible).
const McsEntry *select_mcs(double sinr_db);

// Bits per second one RB sustains at this MCS:
//   efficiency * subcarriers * symbols/slot * 2 slots/ms * 1000 ms/s * streams
// Integer by construction (efficiencies are exact centibit values).
std::int64_t rb_throughput_bps(const McsEntry &mcs, const Scenario &scenario);

struct ThroughputMatrix {
    int num_enodebs = 0;
    int num_ships = 0;
    std::vector<std::int64_t> bps;  // row-major [enodeb][ship], 0 = no MCS attainable

    ThroughputMatrix() = default;
    ThroughputMatrix(int enodebs, int ships)
        : num_enodebs(enodebs), num_ships(ships),
          bps(static_cast<size_t>(enodebs) * ships, 0) {}

    std::int64_t &at(int i, int j) { return bps[static_cast<size_t>(i) * num_ships + j]; }
    std::int64_t at(int i, int j) const { return bps[static_cast<size_t>(i) * num_ships + j]; }
};

// Per-RB deliverable rate for every eNodeB->ship link. A single MCS governs
// all RBs of a link, so one matrix entry covers any allocation size.
ThroughputMatrix throughput_matrix(const SinrMatrix &sinr, const Scenario &scenario);

// Table dump in the canonical column order, for golden-file checks.
std::string mcs_table_csv();

}  // namespace sealte

#endif
