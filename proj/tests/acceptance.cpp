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

// Acceptance suite: six system-level criteria, one pass/fail line each.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "driver.hpp"
#include "error.hpp"
#include "testutil.hpp"

using namespace sealte;
using test::Rng;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(const std::string &why) {
        pass = false;
        details.push_back(why);
    }
    void expect(bool ok, const std::string &why) {
        if (!ok) fail(why);
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char *format, ...) {
    char buffer[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

// ---- criterion 1: MCS table golden values and threshold boundaries -------

void criterion_mcs_golden(Outcome &out) {
    struct Row {
        int index;
        Modulation modulation;
        int num, den;
        double threshold, efficiency;
    };
    static const Row golden[15] = {
        {1, Modulation::qpsk, 1, 12, -6.5, 0.15},  {2, Modulation::qpsk, 1, 9, -4.0, 0.23},
        {3, Modulation::qpsk, 1, 6, -2.6, 0.38},   {4, Modulation::qpsk, 1, 3, -1.0, 0.60},
        {5, Modulation::qpsk, 1, 2, 1.0, 0.88},    {6, Modulation::qpsk, 3, 5, 3.0, 1.18},
        {7, Modulation::qam16, 1, 3, 6.6, 1.48},   {8, Modulation::qam16, 1, 2, 10.0, 1.91},
        {9, Modulation::qam16, 3, 5, 11.4, 2.41},  {10, Modulation::qam64, 1, 2, 11.8, 2.73},
        {11, Modulation::qam64, 1, 2, 13.0, 3.32}, {12, Modulation::qam64, 3, 5, 13.8, 3.90},
        {13, Modulation::qam64, 3, 4, 15.6, 4.52}, {14, Modulation::qam64, 5, 6, 16.8, 5.12},
        {15, Modulation::qam64, 11, 12, 17.6, 5.55},
    };

    const auto &table = mcs_table();
    out.expect(table.size() == 15, "table does not have 15 rows");
    for (int k = 0; k < 15; ++k) {
        const auto &row = table[k];
        const auto &want = golden[k];
        if (row.index != want.index || row.modulation != want.modulation ||
            row.code_rate_num != want.num || row.code_rate_den != want.den ||
            row.sinr_threshold_db != want.threshold || row.efficiency() != want.efficiency)
            out.fail(fmt("row %d differs from the reference table", k + 1));
    }

    for (const auto &row : table) {
        const McsEntry *at = select_mcs(row.sinr_threshold_db);
        const McsEntry *above = select_mcs(row.sinr_threshold_db + 0.01);
        const McsEntry *below = select_mcs(row.sinr_threshold_db - 0.01);
        if (!at || at->index != row.index || !above || above->index != row.index)
            out.fail(fmt("selection at/above threshold of MCS%d is wrong", row.index));
        if (row.index == 1) {
            if (below != nullptr) out.fail("selection below MCS1 should be empty");
        } else if (!below || below->index != row.index - 1) {
            out.fail(fmt("selection below threshold of MCS%d is wrong", row.index));
        }
    }
}

// ---- criterion 2: exact solver equals the oracle on 500 random instances -

void criterion_oracle_equivalence(Outcome &out) {
    Rng rng(20260808);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int enbs = rng.range(1, 3);
        const int ships = rng.range(1, 6);
        const int n_rbs = rng.range(1, 10);
        const ThroughputMatrix t = test::random_matrix(rng, enbs, ships);
        const std::int64_t exact = maxmin_allocate(t, n_rbs).phi_bps;
        const std::int64_t oracle = brute_force_oracle(t, n_rbs).phi_bps;
        if (exact != oracle) {
            out.fail(fmt("trial %d (I=%d J=%d N=%d): solver %lld != oracle %lld", trial, enbs,
                         ships, n_rbs, static_cast<long long>(exact),
                         static_cast<long long>(oracle)));
            if (out.details.size() > 4) return;
        }
        ++checked;
    }
    out.expect(checked == 500, "not all instances ran");
}

// ---- criterion 3: max-min phi dominates both baselines -------------------

void criterion_maxmin_dominance(Outcome &out) {
    Rng rng(777001);
    for (int trial = 0; trial < 1000; ++trial) {
        const int enbs = rng.range(1, 4);
        const int ships = rng.range(1, 12);
        const int n_rbs = rng.range(ships, 25);  // >= ships so every floor fits
        const ThroughputMatrix t = test::random_matrix(rng, enbs, ships);

        const std::int64_t exact = maxmin_allocate(t, n_rbs).phi_bps;
        for (Method method : {Method::round_robin, Method::opportunistic}) {
            const AllocationResult r = allocate(method, t, n_rbs);
            std::int64_t lowest = r.user_throughput_bps.front();
            for (std::int64_t v : r.user_throughput_bps) lowest = std::min(lowest, v);
            if (exact < lowest) {
                out.fail(fmt("trial %d (I=%d J=%d N=%d): maxmin %lld < %s min %lld", trial,
                             enbs, ships, n_rbs, static_cast<long long>(exact),
                             method_name(method), static_cast<long long>(lowest)));
                if (out.details.size() > 4) return;
            }
        }
    }
}

// ---- criterion 4: canonical-geometry trends across ship densities --------

void criterion_trends(Outcome &out) {
    const ScenarioConfig config;  // canonical strait, thermal noise
    const PathLoss model{PathLossModel::three_ray, 1.0};
    const std::vector<int> densities = {4, 6, 8, 10, 12};
    const std::vector<Method> methods = {Method::maxmin, Method::round_robin,
                                         Method::opportunistic};
    const ComparisonReport report = run_sweep(config, densities, model, methods);

    for (const auto &density : report.densities) {
        const MethodResult &mm = density.methods[0];
        const MethodResult &rr = density.methods[1];
        const MethodResult &opp = density.methods[2];
        if (!(mm.jain > opp.jain))
            out.fail(fmt("density %d: jain(maxmin)=%.6f not > jain(opportunistic)=%.6f",
                         density.num_ships, mm.jain, opp.jain));
        if (!(mm.result.phi_bps >= rr.result.phi_bps))
            out.fail(fmt("density %d: phi(maxmin) < phi(roundrobin)", density.num_ships));
        if (!(mm.result.phi_bps >= opp.result.phi_bps))
            out.fail(fmt("density %d: phi(maxmin) < phi(opportunistic)", density.num_ships));
    }
}

// ---- criterion 5: path loss curve qualitative checks ----------------------

void criterion_pathloss(Outcome &out) {
    const double lambda = kSpeedOfLight / 2750e6;
    const double h_tx = 20.0, h_rx = 3.0, duct = 25.0;

    auto count_extrema = [&](auto loss_at) {
        const int n = 20000;
        int extrema = 0;
        double prev = 0.0, cur = 0.0;
        for (int k = 0; k < n; ++k) {
            const double d = 200.0 + (3700.0 - 200.0) * k / (n - 1);
            const double next = loss_at(d);
            if (k >= 2 &&
                ((cur - prev > 0 && next - cur < 0) || (cur - prev < 0 && next - cur > 0)))
                ++extrema;
            prev = cur;
            cur = next;
        }
        return extrema;
    };
    const int three = count_extrema(
        [&](double d) { return pathloss_3ray_db(d, h_tx, h_rx, duct, lambda); });
    const int two_mod =
        count_extrema([&](double d) { return pathloss_2ray_mod_db(d, h_tx, h_rx, lambda); });
    out.expect(three >= two_mod, fmt("3-Ray extrema %d < modified 2-Ray extrema %d over "
                                     "[200, 3700] m",
                                     three, two_mod));

    // beyond the small-angle point the modified model converges onto 2-Ray
    const double d_small = 2.0 * M_PI * h_tx * h_rx / (lambda * 0.1);
    for (int k = 0; k <= 40; ++k) {
        const double d = d_small * std::pow(10.0, k / 40.0);  // one decade
        const double mod = pathloss_2ray_mod_db(d, h_tx, h_rx, lambda);
        const double plain = pathloss_2ray_db(d, h_tx, h_rx, 1.0);
        if (std::fabs(mod - plain) / std::fabs(plain) >= 0.01) {
            out.fail(fmt("no small-angle convergence at d=%.0f m", d));
            break;
        }
    }

    // duct at receiver height: the second interference term vanishes
    for (int k = 0; k < 20000; ++k) {
        const double d = 200.0 + (3700.0 - 200.0) * k / 19999.0;
        const double loss = pathloss_3ray_db(d, h_tx, h_rx, h_rx, lambda);
        const double fspl = -20.0 * std::log10(lambda / (4.0 * M_PI * d));
        if (std::fabs(loss - (fspl - 20.0 * std::log10(2.0))) > 1e-9) {
            out.fail(fmt("h_e=h_rx collapse off by more than 1e-9 dB at d=%.2f m", d));
            break;
        }
    }
}

// ---- criterion 6: invariants on random scenarios + determinism ------------

void criterion_invariants(Outcome &out) {
    Rng rng(424242);
    int produced = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        ScenarioConfig config;
        config.num_ships = rng.range(1, 12);
        config.num_enodebs = rng.range(1, 4);
        config.num_rbs = rng.range(12, 40);
        config.duct_height_m = 5.0 + rng.unit() * 40.0;
        config.tx_power_dbm = 35.0 + rng.unit() * 11.0;
        config.cable_loss_db = rng.unit() * 6.0;
        config.mimo_streams = rng.range(1, 2);
        config.symbols_per_slot = rng.range(6, 7);
        const PathLoss model{static_cast<PathLossModel>(rng.below(3)), 1.0};

        const Scenario scenario = build_bosphorus(config.num_ships, config);
        const ThroughputMatrix t = link_throughputs(scenario, model);
        for (Method method : {Method::maxmin, Method::round_robin, Method::opportunistic}) {
            try {
                const AllocationResult r = allocate(method, t, config.num_rbs);
                validate_allocation(r, t, config.num_rbs);
                const double fairness = jain_index(r.user_throughput_bps);
                const double floor = 1.0 / config.num_ships;
                if (fairness < floor - 1e-9 || fairness > 1.0 + 1e-9)
                    out.fail(fmt("trial %d %s: jain %.9f outside [1/J, 1]", trial,
                                 method_name(method), fairness));
                ++produced;
            } catch (const Error &e) {
                if (e.code() == ErrorCode::infeasible) {
                    ++infeasible;  // a dead link pattern, not an invariant break
                } else {
                    out.fail(fmt("trial %d %s: %s", trial, method_name(method), e.what()));
                }
            }
            if (out.details.size() > 4) return;
        }
    }
    out.expect(produced >= 300,
               fmt("only %d allocations produced (%d infeasible)", produced, infeasible));

    // byte-identical repetition of the full sweep
    const ScenarioConfig config;
    const PathLoss model{PathLossModel::three_ray, 1.0};
    const std::vector<int> densities = {4, 6, 8, 10, 12};
    const std::vector<Method> methods = {Method::maxmin, Method::round_robin,
                                         Method::opportunistic};
    const ComparisonReport first = run_sweep(config, densities, model, methods);
    const ComparisonReport second = run_sweep(config, densities, model, methods);
    out.expect(fairness_csv(first) == fairness_csv(second),
               "fairness CSV differs between identical runs");
    out.expect(per_user_csv(first) == per_user_csv(second),
               "per-user CSV differs between identical runs");
}

struct Criterion {
    int number;
    const char *name;
    double time_limit_s;
    void (*run)(Outcome &);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "MCS table golden values and threshold boundaries", 1.0, criterion_mcs_golden},
        {2, "exact max-min equals the brute-force oracle on 500 random instances", 60.0,
         criterion_oracle_equivalence},
        {3, "max-min phi dominates round robin and opportunistic on 1000 instances", 120.0,
         criterion_maxmin_dominance},
        {4, "canonical-geometry fairness and phi trends across densities", 60.0,
         criterion_trends},
        {5, "path loss curves: oscillation, convergence, and duct collapse", 5.0,
         criterion_pathloss},
        {6, "allocation invariants on 200 random scenarios and sweep determinism", 60.0,
         criterion_invariants},
    };

    int failures = 0;
    for (const Criterion &criterion : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(outcome);
        } catch (const std::exception &e) {
            outcome.fail(std::string("unexpected exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        if (elapsed >= criterion.time_limit_s)
            outcome.fail(fmt("runtime %.2f s exceeds the %.0f s limit", elapsed,
                             criterion.time_limit_s));

        std::printf("[%s] criterion %d: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.number, criterion.name, elapsed);
        for (const std::string &detail : outcome.details)
            std::printf("       %s\n", detail.c_str());
        if (!outcome.pass) ++failures;
    }
    return failures;
}
