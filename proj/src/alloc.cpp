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

#include "alloc.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "error.hpp"

namespace sealte {

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void check_instance(const ThroughputMatrix &t, int n_rbs, const Demand &demand) {
    if (t.num_enodebs < 1 || t.num_ships < 1)
        throw Error(ErrorCode::invalid_argument, "throughput matrix must be at least 1x1");
    if (n_rbs < 1) throw Error(ErrorCode::invalid_argument, "n_rbs must be >= 1");
    if (!demand.per_user_bps.empty() &&
        static_cast<int>(demand.per_user_bps.size()) != t.num_ships)
        throw Error(ErrorCode::invalid_argument, "demand length does not match user count");
    for (std::int64_t d : demand.per_user_bps)
        if (d < 0 || d > 1000000000000000LL)
            throw Error(ErrorCode::invalid_argument, "demand must be within [0, 1e15] bits/s");
}

// eNodeBs a user can connect to: positive per-RB rate, ascending index.
std::vector<std::vector<int>> connection_candidates(const ThroughputMatrix &t) {
    std::vector<std::vector<int>> cand(t.num_ships);
    for (int j = 0; j < t.num_ships; ++j) {
        for (int i = 0; i < t.num_enodebs; ++i)
            if (t.at(i, j) > 0) cand[j].push_back(i);
        if (cand[j].empty())
            throw Error(ErrorCode::infeasible,
                        "user " + std::to_string(j + 1) +
                            " has no usable link (zero throughput to every eNodeB)");
    }
    return cand;
}

// Demand floor on one link: minimum RBs satisfying the user's demand there,
// clamped to n_rbs + 1 ("cannot fit") so it stays in int range however
// large the demand is.
int demand_floor(const ThroughputMatrix &t, const Demand &demand, int i, int j, int n_rbs) {
    const std::int64_t d = demand.at(j);
    if (d <= 0) return 0;
    const std::int64_t need = ceil_div(d, t.at(i, j));
    return need > n_rbs ? n_rbs + 1 : static_cast<int>(need);
}

// Max-T-bar association shared by round robin and opportunistic (tie: lower
// eNodeB index).
std::vector<int> best_rate_association(const ThroughputMatrix &t,
                                       const std::vector<std::vector<int>> &cand) {
    std::vector<int> serving(t.num_ships);
    for (int j = 0; j < t.num_ships; ++j) {
        int best = cand[j].front();
        for (int i : cand[j])
            if (t.at(i, j) > t.at(best, j)) best = i;
        serving[j] = best;
    }
    return serving;
}

std::vector<std::vector<int>> members_of(const std::vector<int> &serving, int num_enodebs) {
    std::vector<std::vector<int>> members(num_enodebs);
    for (int j = 0; j < static_cast<int>(serving.size()); ++j)
        members[serving[j]].push_back(j);
    return members;
}

AllocationResult assemble(const ThroughputMatrix &t, int n_rbs, std::vector<int> serving,
                          Allocation allocation) {
    AllocationResult r;
    r.association.serving = std::move(serving);
    r.allocation = std::move(allocation);
    r.user_throughput_bps.resize(t.num_ships);
    r.beta.resize(t.num_ships);
    r.phi_bps = kUnbounded;
    for (int j = 0; j < t.num_ships; ++j) {
        const int i = r.association.serving[j];
        const int k = r.allocation.at(i, j);
        r.user_throughput_bps[j] = t.at(i, j) * k;
        r.beta[j] = static_cast<double>(k) / n_rbs;
        r.phi_bps = std::min(r.phi_bps, r.user_throughput_bps[j]);
    }
    return r;
}

// Exact max-min RB split for one eNodeB: start every member at its demand
// floor and repeatedly grant one RB to the member with the lowest current
// throughput (tie: lower user index). Optimal because per-RB rates are
// linear: any target minimum phi needs at least ceil(phi/rate) RBs per
// member, and the greedy reaches the largest phi whose total need fits.
class CellWaterFill {
public:
    CellWaterFill(const ThroughputMatrix &t, int n_rbs, const Demand &demand)
        : t_(t), n_rbs_(n_rbs), demand_(demand), rbs_(t.num_ships), cur_(t.num_ships) {}

    // Minimum member throughput after filling, kUnbounded for an empty
    // cell, or -1 when the demand floors alone exceed the budget.
    std::int64_t fill(int enodeb, const std::vector<int> &members) {
        const int count = static_cast<int>(members.size());
        if (count == 0) return kUnbounded;
        int used = 0;
        for (int idx = 0; idx < count; ++idx) {
            const int j = members[idx];
            rbs_[idx] = demand_floor(t_, demand_, enodeb, j, n_rbs_);
            cur_[idx] = t_.at(enodeb, j) * rbs_[idx];
            used += rbs_[idx];
        }
        if (used > n_rbs_) return -1;
        for (int grant = used; grant < n_rbs_; ++grant) {
            int pick = 0;
            for (int idx = 1; idx < count; ++idx)
                if (cur_[idx] < cur_[pick]) pick = idx;
            ++rbs_[pick];
            cur_[pick] += t_.at(enodeb, members[pick]);
        }
        std::int64_t lowest = cur_[0];
        for (int idx = 1; idx < count; ++idx) lowest = std::min(lowest, cur_[idx]);
        return lowest;
    }

    // RB count granted to members[idx] by the latest fill().
    int granted(int idx) const { return rbs_[idx]; }

private:
    const ThroughputMatrix &t_;
    int n_rbs_;
    const Demand &demand_;
    std::vector<int> rbs_;
    std::vector<std::int64_t> cur_;
};

// Branch-and-bound over associations. Users are branched in index order so
// the first optimum found has the lexicographically smallest serving list;
// pruning keeps that property by cutting only subtrees that cannot beat the
// incumbent (or cannot reach the heuristic lower bound before an incumbent
// exists).
class MaxMinSolver {
public:
    MaxMinSolver(const ThroughputMatrix &t, int n_rbs, const Demand &demand)
        : t_(t), n_rbs_(n_rbs), demand_(demand), cand_(connection_candidates(t)),
          fill_(t, n_rbs, demand) {}

    AllocationResult solve() {
        const int num_users = t_.num_ships;
        const int num_enb = t_.num_enodebs;

        // Upper bound per user: served alone by its best feasible eNodeB.
        std::vector<std::int64_t> solo(num_users);
        for (int j = 0; j < num_users; ++j) {
            std::int64_t best = -1;
            for (int i : cand_[j]) {
                if (demand_floor(t_, demand_, i, j, n_rbs_) > n_rbs_) continue;
                best = std::max(best, static_cast<std::int64_t>(n_rbs_) * t_.at(i, j));
            }
            if (best < 0)
                throw Error(ErrorCode::infeasible,
                            "demand for user " + std::to_string(j + 1) +
                                " exceeds a full eNodeB's capacity on every link");
            solo[j] = best;
        }
        solo_suffix_.assign(num_users + 1, kUnbounded);
        for (int j = num_users - 1; j >= 0; --j)
            solo_suffix_[j] = std::min(solo[j], solo_suffix_[j + 1]);

        members_.assign(num_enb, {});
        for (auto &m : members_) m.reserve(num_users);
        cell_phi_.assign(num_enb, kUnbounded);
        serving_.assign(num_users, -1);
        best_serving_.clear();
        best_phi_ = -1;
        floor_phi_ = 0;
        seed_floor();

        branch(0);

        if (best_serving_.empty())
            throw Error(ErrorCode::infeasible,
                        "demand infeasible: no association fits every user's demand floor");
        return extract();
    }

private:
    std::int64_t association_phi(const std::vector<int> &serving) {
        const auto members = members_of(serving, t_.num_enodebs);
        std::int64_t phi = kUnbounded;
        for (int i = 0; i < t_.num_enodebs; ++i) {
            const std::int64_t p = fill_.fill(i, members[i]);
            if (p < 0) return -1;
            phi = std::min(phi, p);
        }
        return phi;
    }

    // Two cheap feasible points raise the pruning floor before the search:
    // the best-rate association and a constructive insertion that places
    // each user where the running minimum suffers least.
    void seed_floor() {
        std::vector<int> serving(t_.num_ships);
        for (int j = 0; j < t_.num_ships; ++j) {
            int best = cand_[j].front();
            for (int i : cand_[j])
                if (t_.at(i, j) > t_.at(best, j)) best = i;
            serving[j] = best;
        }
        floor_phi_ = std::max(floor_phi_, association_phi(serving));

        auto members = std::vector<std::vector<int>>(t_.num_enodebs);
        std::vector<std::int64_t> phis(t_.num_enodebs, kUnbounded);
        for (int j = 0; j < t_.num_ships; ++j) {
            int best_i = -1;
            std::int64_t best_min = -1;
            std::int64_t best_cell = -1;
            for (int i : cand_[j]) {
                members[i].push_back(j);
                const std::int64_t p = fill_.fill(i, members[i]);
                members[i].pop_back();
                if (p < 0) continue;
                std::int64_t lowest = p;
                for (int m = 0; m < t_.num_enodebs; ++m)
                    if (m != i) lowest = std::min(lowest, phis[m]);
                if (lowest > best_min) {
                    best_min = lowest;
                    best_i = i;
                    best_cell = p;
                }
            }
            if (best_i < 0) return;  // constructive path dead-ends; keep other floor
            members[best_i].push_back(j);
            phis[best_i] = best_cell;
            serving[j] = best_i;
        }
        floor_phi_ = std::max(floor_phi_, association_phi(serving));
    }

    void branch(int j) {
        if (j == t_.num_ships) {
            std::int64_t phi = kUnbounded;
            for (std::int64_t p : cell_phi_) phi = std::min(phi, p);
            if (phi > best_phi_ || best_serving_.empty()) {
                best_phi_ = phi;
                best_serving_ = serving_;
            }
            return;
        }
        for (int i : cand_[j]) {
            members_[i].push_back(j);
            const std::int64_t updated = fill_.fill(i, members_[i]);
            if (updated < 0) {
                members_[i].pop_back();
                continue;
            }
            const std::int64_t saved = cell_phi_[i];
            cell_phi_[i] = updated;
            serving_[j] = i;

            std::int64_t bound = solo_suffix_[j + 1];
            for (std::int64_t p : cell_phi_) bound = std::min(bound, p);
            const bool can_improve =
                bound >= floor_phi_ && (best_serving_.empty() || bound > best_phi_);
            if (can_improve) branch(j + 1);

            cell_phi_[i] = saved;
            members_[i].pop_back();
        }
    }

    AllocationResult extract() {
        const auto members = members_of(best_serving_, t_.num_enodebs);
        Allocation alloc(t_.num_enodebs, t_.num_ships);
        for (int i = 0; i < t_.num_enodebs; ++i) {
            if (members[i].empty()) continue;
            fill_.fill(i, members[i]);
            for (int idx = 0; idx < static_cast<int>(members[i].size()); ++idx)
                alloc.at(i, members[i][idx]) = fill_.granted(idx);
        }
        return assemble(t_, n_rbs_, best_serving_, std::move(alloc));
    }

    const ThroughputMatrix &t_;
    int n_rbs_;
    const Demand &demand_;
    std::vector<std::vector<int>> cand_;
    CellWaterFill fill_;

    std::vector<std::int64_t> solo_suffix_;
    std::vector<std::vector<int>> members_;
    std::vector<std::int64_t> cell_phi_;
    std::vector<int> serving_;
    std::vector<int> best_serving_;
    std::int64_t best_phi_ = -1;
    std::int64_t floor_phi_ = 0;
};

}  // namespace

const char *method_name(Method m) {
    switch (m) {
        case Method::maxmin: return "maxmin";
        case Method::round_robin: return "roundrobin";
        case Method::opportunistic: return "opportunistic";
    }
    return "?";
}

AllocationResult maxmin_allocate(const ThroughputMatrix &tmat, int n_rbs, const Demand &demand) {
    check_instance(tmat, n_rbs, demand);
    AllocationResult result = MaxMinSolver(tmat, n_rbs, demand).solve();
    validate_allocation(result, tmat, n_rbs, demand);
    return result;
}

AllocationResult round_robin_allocate(const ThroughputMatrix &tmat, int n_rbs) {
    check_instance(tmat, n_rbs, {});
    const auto cand = connection_candidates(tmat);
    const auto serving = best_rate_association(tmat, cand);
    const auto members = members_of(serving, tmat.num_enodebs);

    Allocation alloc(tmat.num_enodebs, tmat.num_ships);
    for (int i = 0; i < tmat.num_enodebs; ++i) {
        const int count = static_cast<int>(members[i].size());
        if (count == 0) continue;
        const int base = n_rbs / count;
        const int leftover = n_rbs % count;
        for (int idx = 0; idx < count; ++idx)
            alloc.at(i, members[i][idx]) = base + (idx < leftover ? 1 : 0);
    }
    AllocationResult result = assemble(tmat, n_rbs, serving, std::move(alloc));
    validate_allocation(result, tmat, n_rbs, {});
    return result;
}

AllocationResult opportunistic_allocate(const ThroughputMatrix &tmat, int n_rbs,
                                        const Demand &demand) {
    check_instance(tmat, n_rbs, demand);
    const auto cand = connection_candidates(tmat);
    const auto serving = best_rate_association(tmat, cand);
    const auto members = members_of(serving, tmat.num_enodebs);

    Allocation alloc(tmat.num_enodebs, tmat.num_ships);
    for (int i = 0; i < tmat.num_enodebs; ++i) {
        if (members[i].empty()) continue;
        int used = 0;
        for (int j : members[i]) {
            alloc.at(i, j) = std::max(1, demand_floor(tmat, demand, i, j, n_rbs));
            used += alloc.at(i, j);
        }
        if (used > n_rbs)
            throw Error(ErrorCode::infeasible, "eNodeB " + std::to_string(i + 1) +
                                                   ": connected users' floors exceed " +
                                                   std::to_string(n_rbs) + " RBs");
        int top = members[i].front();
        for (int j : members[i])
            if (tmat.at(i, j) > tmat.at(i, top)) top = j;
        alloc.at(i, top) += n_rbs - used;
    }
    AllocationResult result = assemble(tmat, n_rbs, serving, std::move(alloc));
    validate_allocation(result, tmat, n_rbs, demand);
    return result;
}

namespace {

// Exhaustive max-min split of the cell's RBs among its members; returns the
// best reachable minimum (-1 when the floors do not fit) and the first
// split attaining it.
struct CellEnumerator {
    const ThroughputMatrix &t;
    int enodeb;
    const std::vector<int> &members;
    std::vector<int> floors;
    std::int64_t best = -1;
    std::vector<int> split;
    std::vector<int> best_split;

    CellEnumerator(const ThroughputMatrix &tmat, const Demand &demand, int i,
                   const std::vector<int> &mem, int n_rbs)
        : t(tmat), enodeb(i), members(mem), split(mem.size(), 0) {
        floors.reserve(mem.size());
        for (int j : mem) floors.push_back(demand_floor(tmat, demand, i, j, n_rbs));
    }

    void run(int n_rbs) { recurse(0, n_rbs, kUnbounded); }

    void recurse(size_t idx, int remaining, std::int64_t lowest) {
        if (idx == members.size()) {
            if (lowest > best) {
                best = lowest;
                best_split = split;
            }
            return;
        }
        const std::int64_t rate = t.at(enodeb, members[idx]);
        for (int k = floors[idx]; k <= remaining; ++k) {
            split[idx] = k;
            recurse(idx + 1, remaining - k, std::min(lowest, rate * k));
        }
    }
};

}  // namespace

AllocationResult brute_force_oracle(const ThroughputMatrix &tmat, int n_rbs,
                                    const Demand &demand) {
    check_instance(tmat, n_rbs, demand);
    if (tmat.num_enodebs > 3 || tmat.num_ships > 6 || n_rbs > 10)
        throw Error(ErrorCode::invalid_argument,
                    "oracle size contract exceeded (needs I<=3, J<=6, N<=10)");
    const auto cand = connection_candidates(tmat);
    const int num_users = tmat.num_ships;

    std::vector<size_t> pos(num_users, 0);
    std::vector<int> serving(num_users);
    std::int64_t best_phi = -1;
    std::vector<int> best_serving;
    Allocation best_alloc;

    bool done = false;
    while (!done) {
        for (int j = 0; j < num_users; ++j) serving[j] = cand[j][pos[j]];

        const auto members = members_of(serving, tmat.num_enodebs);
        std::int64_t phi = kUnbounded;
        Allocation alloc(tmat.num_enodebs, tmat.num_ships);
        bool feasible = true;
        for (int i = 0; i < tmat.num_enodebs && feasible; ++i) {
            if (members[i].empty()) continue;
            CellEnumerator cell(tmat, demand, i, members[i], n_rbs);
            cell.run(n_rbs);
            if (cell.best < 0) {
                feasible = false;
                break;
            }
            phi = std::min(phi, cell.best);
            for (size_t idx = 0; idx < members[i].size(); ++idx)
                alloc.at(i, members[i][idx]) = cell.best_split[idx];
        }
        if (feasible && phi > best_phi) {
            best_phi = phi;
            best_serving = serving;
            best_alloc = std::move(alloc);
        }

        // Next association in lexicographic order of serving lists.
        int j = num_users - 1;
        while (j >= 0 && ++pos[j] == cand[j].size()) pos[j--] = 0;
        done = (j < 0);
    }

    if (best_serving.empty())
        throw Error(ErrorCode::infeasible,
                    "demand infeasible: no association fits every user's demand floor");
    AllocationResult result = assemble(tmat, n_rbs, best_serving, std::move(best_alloc));
    validate_allocation(result, tmat, n_rbs, demand);
    return result;
}

AllocationResult allocate(Method method, const ThroughputMatrix &tmat, int n_rbs,
                          const Demand &demand) {
    switch (method) {
        case Method::maxmin: return maxmin_allocate(tmat, n_rbs, demand);
        case Method::round_robin: return round_robin_allocate(tmat, n_rbs);
        case Method::opportunistic: return opportunistic_allocate(tmat, n_rbs, demand);
    }
    throw Error(ErrorCode::invalid_argument, "unknown allocation method");
}

void validate_allocation(const AllocationResult &result, const ThroughputMatrix &tmat, int n_rbs,
                         const Demand &demand) {
    const int num_enb = tmat.num_enodebs;
    const int num_users = tmat.num_ships;
    auto fail = [](const std::string &what) {
        throw Error(ErrorCode::invalid_argument, "allocation invariant violated: " + what);
    };

    if (static_cast<int>(result.association.serving.size()) != num_users ||
        result.allocation.num_enodebs != num_enb || result.allocation.num_ships != num_users ||
        static_cast<int>(result.user_throughput_bps.size()) != num_users ||
        static_cast<int>(result.beta.size()) != num_users)
        fail("shape mismatch");

    for (int i = 0; i < num_enb; ++i) {
        std::int64_t used = 0;
        for (int j = 0; j < num_users; ++j) {
            const int k = result.allocation.at(i, j);
            if (k < 0 || k > n_rbs) fail("RB count out of range");
            used += k;
        }
        if (used > n_rbs) fail("eNodeB " + std::to_string(i + 1) + " exceeds its RB budget");
    }
    std::int64_t lowest = kUnbounded;
    for (int j = 0; j < num_users; ++j) {
        const int s = result.association.serving[j];
        if (s < 0 || s >= num_enb) fail("serving index out of range");
        if (tmat.at(s, j) <= 0) fail("serving link has zero throughput");
        for (int i = 0; i < num_enb; ++i)
            if (i != s && result.allocation.at(i, j) != 0)
                fail("RBs allocated off the serving link");
        const int k = result.allocation.at(s, j);
        if (demand.at(j) > 0 && k < demand_floor(tmat, demand, s, j, n_rbs))
            fail("demand floor unmet for user " + std::to_string(j + 1));
        if (result.user_throughput_bps[j] != tmat.at(s, j) * k) fail("throughput mismatch");
        if (result.beta[j] < 0.0 || result.beta[j] > 1.0) fail("beta out of [0,1]");
        lowest = std::min(lowest, result.user_throughput_bps[j]);
    }
    if (result.phi_bps != lowest) fail("phi is not the minimum user throughput");
}

std::string allocation_json(const AllocationResult &result, Method method) {
    nlohmann::ordered_json doc;
    doc["method"] = method_name(method);
    auto association = nlohmann::ordered_json::array();
    for (int s : result.association.serving) association.push_back(s + 1);
    doc["association"] = association;
    auto rbs = nlohmann::ordered_json::array();
    for (int i = 0; i < result.allocation.num_enodebs; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < result.allocation.num_ships; ++j)
            row.push_back(result.allocation.at(i, j));
        rbs.push_back(row);
    }
    doc["rbs"] = rbs;
    doc["user_throughput_bps"] = result.user_throughput_bps;
    doc["phi_bps"] = result.phi_bps;
    return doc.dump(2) + "\n";
}

}  // namespace sealte
