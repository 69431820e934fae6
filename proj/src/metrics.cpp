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

#include "metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "error.hpp"

namespace sealte {

double jain_index(std::span<const std::int64_t> throughputs_bps) {
    if (throughputs_bps.empty())
        throw Error(ErrorCode::invalid_argument, "fairness of an empty throughput vector");
    std::int64_t peak = 0;
    for (std::int64_t t : throughputs_bps) {
        if (t < 0)
            throw Error(ErrorCode::invalid_argument, "fairness of a negative throughput");
        peak = std::max(peak, t);
    }
    if (peak == 0)
        throw Error(ErrorCode::invalid_argument,
                    "fairness undefined for an all-zero throughput vector");
    // Scale-invariant, so normalise by the peak to keep the squares tame.
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::int64_t t : throughputs_bps) {
        const double x = static_cast<double>(t) / static_cast<double>(peak);
        sum += x;
        sum_sq += x * x;
    }
    return sum * sum / (static_cast<double>(throughputs_bps.size()) * sum_sq);
}

ComparisonReport build_report(std::vector<SweepEntry> entries) {
    if (entries.empty()) throw Error(ErrorCode::invalid_argument, "empty sweep");

    std::map<int, std::map<Method, AllocationResult>> grid;
    for (auto &entry : entries) {
        auto [it, inserted] =
            grid[entry.num_ships].emplace(entry.method, std::move(entry.result));
        if (!inserted)
            throw Error(ErrorCode::invalid_argument,
                        "duplicate sweep cell for " + std::to_string(entry.num_ships) +
                            " ships, method " + method_name(entry.method));
    }

    std::vector<Method> expected;
    for (const auto &[method, result] : grid.begin()->second) expected.push_back(method);

    ComparisonReport report;
    for (auto &[num_ships, cells] : grid) {
        DensityResults row;
        row.num_ships = num_ships;
        for (Method method : expected) {
            auto it = cells.find(method);
            if (it == cells.end())
                throw Error(ErrorCode::invalid_argument,
                            "incomplete sweep: " + std::to_string(num_ships) +
                                " ships is missing method " + method_name(method));
            MethodResult cell;
            cell.method = method;
            cell.result = std::move(it->second);
            cell.jain = jain_index(cell.result.user_throughput_bps);
            cell.total_bps = 0;
            for (std::int64_t t : cell.result.user_throughput_bps) cell.total_bps += t;
            row.methods.push_back(std::move(cell));
        }
        if (cells.size() != expected.size())
            throw Error(ErrorCode::invalid_argument,
                        "incomplete sweep: method sets differ across densities");
        report.densities.push_back(std::move(row));
    }
    return report;
}

std::string fairness_csv(const ComparisonReport &report) {
    std::string csv = "num_ships,method,jain,phi_bps,total_bps\n";
    char line[160];
    for (const auto &density : report.densities) {
        for (const auto &cell : density.methods) {
            std::snprintf(line, sizeof line, "%d,%s,%.6f,%lld,%lld\n", density.num_ships,
                          method_name(cell.method), cell.jain,
                          static_cast<long long>(cell.result.phi_bps),
                          static_cast<long long>(cell.total_bps));
            csv += line;
        }
    }
    return csv;
}

std::string per_user_csv(const ComparisonReport &report) {
    std::string csv = "num_ships,method,user_id,serving_enodeb,rbs,throughput_bps\n";
    char line[160];
    for (const auto &density : report.densities) {
        for (const auto &cell : density.methods) {
            const auto &r = cell.result;
            for (int j = 0; j < static_cast<int>(r.association.serving.size()); ++j) {
                const int serving = r.association.serving[j];
                std::snprintf(line, sizeof line, "%d,%s,%d,%d,%d,%lld\n", density.num_ships,
                              method_name(cell.method), j + 1, serving + 1,
                              r.allocation.at(serving, j),
                              static_cast<long long>(r.user_throughput_bps[j]));
                csv += line;
            }
        }
    }
    return csv;
}

}  // namespace sealte
