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

#ifndef SEALTE_ALLOC_HPP
#define SEALTE_ALLOC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linkadapt.hpp"

namespace sealte {

enum class Method { maxmin, round_robin, opportunistic };

const char *method_name(Method m);

// Per-user demand in bits/s. An empty vector means no demand (all zero).
struct Demand {
    std::vector<std::int64_t> per_user_bps;

    std::int64_t at(int user) const {
        return per_user_bps.empty() ? 0 : per_user_bps[static_cast<size_t>(user)];
    }
    static Demand uniform(int num_users, std::int64_t bps) {
        Demand d;
        if (bps > 0) d.per_user_bps.assign(static_cast<size_t>(num_users), bps);
        return d;
    }
};

// serving[j] is the 0-based index of the single eNodeB connected to user j.
struct Association {
    std::vector<int> serving;
};

// Integer RB counts per (eNodeB, user); nonzero only on serving links.
struct Allocation {
    int num_enodebs = 0;
    int num_ships = 0;
    std::vector<int> rbs;

    Allocation() = default;
    Allocation(int enodebs, int ships)
        : num_enodebs(enodebs), num_ships(ships), rbs(static_cast<size_t>(enodebs) * ships, 0) {}

    int &at(int i, int j) { return rbs[static_cast<size_t>(i) * num_ships + j]; }
    int at(int i, int j) const { return rbs[static_cast<size_t>(i) * num_ships + j]; }
};

struct AllocationResult {
    Association association;
    Allocation allocation;
    std::vector<std::int64_t> user_throughput_bps;
    std::vector<double> beta;  // allocated fraction of the serving eNodeB's RBs
    std::int64_t phi_bps = 0;  // minimum user throughput
};

// Exact optimum of: maximize the minimum user throughput over all single
// associations and integer RB splits (at most n_rbs per eNodeB, demand
// floors respected). Branch-and-bound over associations; for a fixed
// association each eNodeB is solved exactly by greedy water-filling, which
// is optimal for max-min with linear per-RB rates. Ties in the greedy go to
// the lower user index; ties between associations to the lexicographically
// smaller serving list. Throws Error(infeasible) for a user with no usable
// link (naming the user) or for unsatisfiable demand.
AllocationResult maxmin_allocate(const ThroughputMatrix &tmat, int n_rbs,
                                 const Demand &demand = {});

// Serves each user from its highest-rate eNodeB (tie: lower id) and splits
// each eNodeB's RBs equally among its users, leftovers one each by
// ascending user index.
AllocationResult round_robin_allocate(const ThroughputMatrix &tmat, int n_rbs);

// Same association rule; every connected user gets max(1, demand floor)
// RBs, then all remaining RBs go to the eNodeB's highest-rate user (tie:
// lower user index).
AllocationResult opportunistic_allocate(const ThroughputMatrix &tmat, int n_rbs,
                                        const Demand &demand = {});

// Exhaustive enumeration of every association and every integer RB split.
// Only accepts instances with at most 3 eNodeBs, 6 users, and 10 RBs;
// larger ones throw Error(invalid_argument).
AllocationResult brute_force_oracle(const ThroughputMatrix &tmat, int n_rbs,
                                    const Demand &demand = {});

AllocationResult allocate(Method method, const ThroughputMatrix &tmat, int n_rbs,
                          const Demand &demand = {});

// Checks every structural invariant (single positive-rate serving link per
// user, per-eNodeB RB budgets, zero RBs off the serving link, demand
// floors, throughput/phi/beta consistency). Throws on any violation; every
// allocator runs this on its own output before returning.
void validate_allocation(const AllocationResult &result, const ThroughputMatrix &tmat, int n_rbs,
                         const Demand &demand = {});

// {"method", "association" (1-based ids), "rbs", "user_throughput_bps",
//  "phi_bps"} as pretty-printed JSON.
std::string allocation_json(const AllocationResult &result, Method method);

}  // namespace sealte

#endif
