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

// Loads the shared library at runtime the way an FFI client would: no
// compile-time linking, everything resolved through dlsym.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dlfcn.h>

#include <cstdint>
#include <string>

namespace {

struct Library {
    void *handle = nullptr;

    Library() { handle = dlopen(SEALTE_LIB_PATH, RTLD_NOW | RTLD_LOCAL); }
    ~Library() {
        if (handle) dlclose(handle);
    }
    template <typename Fn>
    Fn sym(const char *name) const {
        return reinterpret_cast<Fn>(dlsym(handle, name));
    }
};

}  // namespace

TEST_CASE("the shared library is consumable through dlopen/dlsym alone") {
    Library lib;
    REQUIRE_MESSAGE(lib.handle != nullptr, dlerror());

    auto version = lib.sym<const char *(*)()>("sealte_version");
    auto create = lib.sym<int (*)(int, void **)>("sealte_scenario_create");
    auto scenario_free = lib.sym<void (*)(void *)>("sealte_scenario_free");
    auto num_rbs = lib.sym<int (*)(const void *)>("sealte_scenario_num_rbs");
    auto solve = lib.sym<int (*)(const void *, int, int, void **)>("sealte_solve");
    auto result_free = lib.sym<void (*)(void *)>("sealte_result_free");
    auto phi = lib.sym<std::int64_t (*)(const void *)>("sealte_result_phi_bps");
    auto last_error = lib.sym<const char *(*)()>("sealte_last_error");

    REQUIRE(version != nullptr);
    REQUIRE(create != nullptr);
    REQUIRE(scenario_free != nullptr);
    REQUIRE(num_rbs != nullptr);
    REQUIRE(solve != nullptr);
    REQUIRE(result_free != nullptr);
    REQUIRE(phi != nullptr);
    REQUIRE(last_error != nullptr);

    CHECK(std::string(version()).size() >= 5);

    void *scenario = nullptr;
    REQUIRE(create(8, &scenario) == 0);
    CHECK(num_rbs(scenario) == 25);

    void *result = nullptr;
    REQUIRE_MESSAGE(solve(scenario, /*3ray*/ 2, /*maxmin*/ 0, &result) == 0, last_error());
    CHECK(phi(result) > 0);

    result_free(result);
    scenario_free(scenario);

    // no C++ symbols bleed into the dynamic surface
    CHECK(dlsym(lib.handle, "_ZN6sealte15maxmin_allocateERKNS_16ThroughputMatrixEiRKNS_6DemandE") ==
          nullptr);
}
