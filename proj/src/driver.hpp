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

#ifndef SEALTE_DRIVER_HPP
#define SEALTE_DRIVER_HPP

#include <span>

#include "alloc.hpp"
#include "channel.hpp"
#include "linkadapt.hpp"
#include "metrics.hpp"
#include "scenario.hpp"

namespace sealte {

// SINR -> MCS -> per-RB throughput for every link of the scenario.
ThroughputMatrix link_throughputs(const Scenario &scenario, const PathLoss &model);

// Full pipeline for one allocation method. The demand defaults to the
// scenario config's uniform demand when run through run_sweep/the C API.
AllocationResult run_method(const Scenario &scenario, const PathLoss &model, Method method,
                            const Demand &demand = {});

// Rebuilds the scenario at each ship count and runs every requested method.
ComparisonReport run_sweep(const ScenarioConfig &config, std::span<const int> ship_counts,
                           const PathLoss &model, std::span<const Method> methods);

// Runs the exact solver and the exhaustive oracle on the same instance and
// throws Error(oracle_mismatch) unless their phi values agree exactly.
// Propagates the oracle's size-contract error for oversized instances.
void oracle_check(const Scenario &scenario, const PathLoss &model, const Demand &demand = {});

}  // namespace sealte

#endif
