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

#ifndef SEALTE_ERROR_HPP
#define SEALTE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sealte {

enum class ErrorCode {
    invalid_argument,  // domain errors, bad handles, oracle size contract
    config,            // config file / field validation failures
    infeasible,        // unservable user or unreachable demand
    oracle_mismatch,   // exact solver disagrees with the brute-force oracle
    io,                // file read/write failures
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sealte

#endif
