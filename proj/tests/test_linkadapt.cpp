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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "error.hpp"
#include "linkadapt.hpp"
#include "testutil.hpp"

using namespace sealte;

namespace {

struct GoldenRow {
    int index;
    Modulation modulation;
    int num;
    int den;
    double threshold;
    double efficiency;
};

// Independent copy of the reference table.
constexpr GoldenRow kGolden[15] = {
    {1, Modulation::qpsk, 1, 12, -6.5, 0.15},
    {2, Modulation::qpsk, 1, 9, -4.0, 0.23},
    {3, Modulation::qpsk, 1, 6, -2.6, 0.38},
    {4, Modulation::qpsk, 1, 3, -1.0, 0.60},
    {5, Modulation::qpsk, 1, 2, 1.0, 0.88},
    {6, Modulation::qpsk, 3, 5, 3.0, 1.18},
    {7, Modulation::qam16, 1, 3, 6.6, 1.48},
    {8, Modulation::qam16, 1, 2, 10.0, 1.91},
    {9, Modulation::qam16, 3, 5, 11.4, 2.41},
    {10, Modulation::qam64, 1, 2, 11.8, 2.73},
    {11, Modulation::qam64, 1, 2, 13.0, 3.32},
    {12, Modulation::qam64, 3, 5, 13.8, 3.90},
    {13, Modulation::qam64, 3, 4, 15.6, 4.52},
    {14, Modulation::qam64, 5, 6, 16.8, 5.12},
    {15, Modulation::qam64, 11, 12, 17.6, 5.55},
};

}  // namespace

TEST_CASE("the 15-entry table is bit-exact") {
    const auto &table = mcs_table();
    REQUIRE(table.size() == 15);
    for (int k = 0; k < 15; ++k) {
        const auto &row = table[k];
        const auto &want = kGolden[k];
        CHECK(row.index == want.index);
        CHECK(row.modulation == want.modulation);
        CHECK(row.code_rate_num == want.num);
        CHECK(row.code_rate_den == want.den);
        CHECK(row.sinr_threshold_db == want.threshold);
        CHECK(row.efficiency() == want.efficiency);
    }
    // strictly increasing in index, threshold, and efficiency
    for (int k = 1; k < 15; ++k) {
        CHECK(table[k].index == table[k - 1].index + 1);
        CHECK(table[k].sinr_threshold_db > table[k - 1].sinr_threshold_db);
        CHECK(table[k].efficiency_centibits > table[k - 1].efficiency_centibits);
    }
}

TEST_CASE("selection picks the highest satisfied threshold") {
    REQUIRE(select_mcs(17.6) != nullptr);
    CHECK(select_mcs(17.6)->index == 15);
    CHECK(select_mcs(17.6)->efficiency() == 5.55);

    REQUIRE(select_mcs(12.9) != nullptr);
    CHECK(select_mcs(12.9)->index == 10);  // 11.8 <= 12.9 < 13.0
    CHECK(select_mcs(12.9)->efficiency() == 2.73);

    CHECK(select_mcs(-7.0) == nullptr);
    CHECK(select_mcs(1e9) != nullptr);
    CHECK(select_mcs(1e9)->index == 15);
    CHECK_THROWS_AS(select_mcs(std::nan("")), Error);
}

TEST_CASE("selection at every threshold, 0.01 dB either side") {
    for (const auto &row : mcs_table()) {
        REQUIRE(select_mcs(row.sinr_threshold_db) != nullptr);
        CHECK(select_mcs(row.sinr_threshold_db)->index == row.index);

        const McsEntry *above = select_mcs(row.sinr_threshold_db + 0.01);
        REQUIRE(above != nullptr);
        CHECK(above->index == row.index);

        const McsEntry *below = select_mcs(row.sinr_threshold_db - 0.01);
        if (row.index == 1) {
            CHECK(below == nullptr);
        } else {
            REQUIRE(below != nullptr);
            CHECK(below->index == row.index - 1);
        }
    }
}

TEST_CASE("selection is a monotone step function with 16 levels") {
    int last = -1;
    std::set<int> seen;
    for (double sinr = -8.0; sinr <= 19.0; sinr += 0.01) {
        const McsEntry *mcs = select_mcs(sinr);
        const int level = mcs ? mcs->index : 0;
        CHECK(level >= last);
        last = level;
        seen.insert(level);
    }
    CHECK(seen.size() == 16);  // no-MCS region plus 15 plateaus
}

TEST_CASE("per-RB throughput under the default constants") {
    const Scenario defaults = build_bosphorus(1);
    CHECK(rb_throughput_bps(mcs_table().back(), defaults) == 1864800);
    CHECK(rb_throughput_bps(mcs_table().front(), defaults) == 50400);

    Scenario single_stream = defaults;
    single_stream.mimo_streams = 1;
    for (const auto &row : mcs_table())
        CHECK(2 * rb_throughput_bps(row, single_stream) == rb_throughput_bps(row, defaults));
}

TEST_CASE("throughput matrix maps SINR through the table") {
    const Scenario s = build_bosphorus(3);
    const int enbs = static_cast<int>(s.enodebs.size());

    SinrMatrix low(enbs, 3);
    SinrMatrix high(enbs, 3);
    for (int i = 0; i < enbs; ++i) {
        for (int j = 0; j < 3; ++j) {
            low.linear(i, j) = std::pow(10.0, -10.0 / 10.0);  // -10 dB
            high.linear(i, j) = std::pow(10.0, 20.0 / 10.0);  // 20 dB
        }
    }
    const ThroughputMatrix zeros = throughput_matrix(low, s);
    const ThroughputMatrix caps = throughput_matrix(high, s);
    for (int i = 0; i < enbs; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(zeros.at(i, j) == 0);
            CHECK(caps.at(i, j) == 1864800);
        }
    }

    // raising a single entry never lowers its throughput
    SinrMatrix bumped = low;
    bumped.linear(1, 2) = std::pow(10.0, 3.0 / 10.0);
    CHECK(throughput_matrix(bumped, s).at(1, 2) >= zeros.at(1, 2));
}

TEST_CASE("every nonzero default-scenario rate is one of 15 values") {
    const Scenario s = build_bosphorus(12);
    const std::set<std::int64_t> reachable(test::quantized_rates().begin(),
                                           test::quantized_rates().end());
    CHECK(reachable.size() == 15);

    test::Rng rng(99);
    SinrMatrix sinr(static_cast<int>(s.enodebs.size()), 12);
    for (int i = 0; i < sinr.num_enodebs(); ++i)
        for (int j = 0; j < 12; ++j)
            sinr.linear(i, j) = std::pow(10.0, (-12.0 + 35.0 * rng.unit()) / 10.0);
    const ThroughputMatrix t = throughput_matrix(sinr, s);
    for (std::int64_t v : t.bps)
        if (v != 0) CHECK(reachable.count(v) == 1);
}

TEST_CASE("table CSV matches the golden dump") {
    const std::string expected =
        "mcs,modulation,code_rate,sinr_threshold_db,efficiency_bits_per_symbol\n"
        "1,QPSK,1/12,-6.5,0.15\n"
        "2,QPSK,1/9,-4,0.23\n"
        "3,QPSK,1/6,-2.6,0.38\n"
        "4,QPSK,1/3,-1,0.60\n"
        "5,QPSK,1/2,1,0.88\n"
        "6,QPSK,3/5,3,1.18\n"
        "7,16QAM,1/3,6.6,1.48\n"
        "8,16QAM,1/2,10,1.91\n"
        "9,16QAM,3/5,11.4,2.41\n"
        "10,64QAM,1/2,11.8,2.73\n"
        "11,64QAM,1/2,13,3.32\n"
        "12,64QAM,3/5,13.8,3.90\n"
        "13,64QAM,3/4,15.6,4.52\n"
        "14,64QAM,5/6,16.8,5.12\n"
        "15,64QAM,11/12,17.6,5.55\n";
    CHECK(mcs_table_csv() == expected);
}
