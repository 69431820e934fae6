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

#include "driver.hpp"

#include <string>

#include "error.hpp"

namespace sealte {

namespace {

int uniform_rbs(const Scenario &scenario) {
    if (scenario.enodebs.empty())
        throw Error(ErrorCode::invalid_argument, "scenario has no eNodeBs");
    return scenario.enodebs.front().num_rbs;
}

}  // namespace

ThroughputMatrix link_throughputs(const Scenario &scenario, const PathLoss &model) {
    return throughput_matrix(sinr_matrix(scenario, model), scenario);
}

AllocationResult run_method(const Scenario &scenario, const PathLoss &model, Method method,
                            const Demand &demand) {
    return allocate(method, link_throughputs(scenario, model), uniform_rbs(scenario), demand);
}

ComparisonReport run_sweep(const ScenarioConfig &config, std::span<const int> ship_counts,
                           const PathLoss &model, std::span<const Method> methods) {
    if (ship_counts.empty()) throw Error(ErrorCode::config, "sweep needs at least one ship count");
    if (methods.empty()) throw Error(ErrorCode::config, "sweep needs at least one method");
    for (size_t k = 1; k < ship_counts.size(); ++k)
        if (ship_counts[k] <= ship_counts[k - 1])
            throw Error(ErrorCode::config, "sweep ship counts must be strictly ascending");

    std::vector<SweepEntry> entries;
    entries.reserve(ship_counts.size() * methods.size());
    for (int num_ships : ship_counts) {
        const Scenario scenario = build_bosphorus(num_ships, config);
        const ThroughputMatrix tmat = link_throughputs(scenario, model);
        const Demand demand = Demand::uniform(num_ships, config.demand_bps);
        for (Method method : methods) {
            SweepEntry entry;
            entry.num_ships = num_ships;
            entry.method = method;
            entry.result = allocate(method, tmat, uniform_rbs(scenario), demand);
            entries.push_back(std::move(entry));
        }
    }
    return build_report(std::move(entries));
}

void oracle_check(const Scenario &scenario, const PathLoss &model, const Demand &demand) {
    const ThroughputMatrix tmat = link_throughputs(scenario, model);
    const int n_rbs = uniform_rbs(scenario);
    const AllocationResult exact = maxmin_allocate(tmat, n_rbs, demand);
    const AllocationResult oracle = brute_force_oracle(tmat, n_rbs, demand);
    if (exact.phi_bps != oracle.phi_bps)
        throw Error(ErrorCode::oracle_mismatch,
                    "max-min solver phi " + std::to_string(exact.phi_bps) +
                        " != oracle phi " + std::to_string(oracle.phi_bps));
}

}  // namespace sealte
