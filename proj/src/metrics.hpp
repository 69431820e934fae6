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

#ifndef SEALTE_METRICS_HPP
#define SEALTE_METRICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alloc.hpp"

namespace sealte {

// Jain fairness index (sum T)^2 / (J * sum T^2), in [1/J, 1] for any
// not-all-zero vector. Throws Error(invalid_argument) when empty, negative,
// or all zero.
double jain_index(std::span<const std::int64_t> throughputs_bps);

struct MethodResult {
    Method method = Method::maxmin;
    AllocationResult result;
    double jain = 0.0;
    std::int64_t total_bps = 0;
};

struct DensityResults {
    int num_ships = 0;
    std::vector<MethodResult> methods;  // canonical method order
};

struct ComparisonReport {
    std::vector<DensityResults> densities;  // ascending ship count
};

struct SweepEntry {
    int num_ships = 0;
    Method method = Method::maxmin;
    AllocationResult result;
};

// Groups sweep entries into a report: densities ascending, methods in
// canonical order, Jain and totals computed per cell. Every density must
// carry the same method set; anything missing or duplicated throws
// Error(invalid_argument).
ComparisonReport build_report(std::vector<SweepEntry> entries);

// num_ships,method,jain,phi_bps,total_bps
std::string fairness_csv(const ComparisonReport &report);

// num_ships,method,user_id,serving_enodeb,rbs,throughput_bps
std::string per_user_csv(const ComparisonReport &report);

}  // namespace sealte

#endif
