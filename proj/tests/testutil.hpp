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

#ifndef SEALTE_TESTUTIL_HPP
#define SEALTE_TESTUTIL_HPP

#include <cstdint>
#include <vector>

#include "linkadapt.hpp"

namespace sealte::test {

// splitmix64: tiny, seeded, identical on every platform.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
};

// The 15 per-RB rates reachable under default scenario constants.
inline const std::vector<std::int64_t> &quantized_rates() {
    static const std::vector<std::int64_t> rates = [] {
        std::vector<std::int64_t> out;
        Scenario defaults;
        for (const auto &entry : mcs_table()) out.push_back(rb_throughput_bps(entry, defaults));
        return out;
    }();
    return rates;
}

// Random matrix with entries from the quantized rates plus zeros; every
// user keeps at least one positive link.
inline ThroughputMatrix random_matrix(Rng &rng, int enodebs, int ships,
                                      double zero_prob = 0.35) {
    const auto &rates = quantized_rates();
    ThroughputMatrix t(enodebs, ships);
    for (int i = 0; i < enodebs; ++i)
        for (int j = 0; j < ships; ++j)
            t.at(i, j) = rng.unit() < zero_prob
                             ? 0
                             : rates[rng.below(static_cast<int>(rates.size()))];
    for (int j = 0; j < ships; ++j) {
        bool connected = false;
        for (int i = 0; i < enodebs; ++i) connected = connected || t.at(i, j) > 0;
        if (!connected)
            t.at(rng.below(enodebs), j) = rates[rng.below(static_cast<int>(rates.size()))];
    }
    return t;
}

}  // namespace sealte::test

#endif
