// Copyright 2026 The stabgeo Authors
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

#pragma once

#include <span>

namespace stabgeo {

// A two-qubit stabilizer state with space-separated unnormalized amplitudes
// (entries 1, -1, i, -i, 0), its generators and its angle to |00>.
struct GoldenState {
    const char *amplitudes;
    const char *generators;
    const char *angle;
};

// All 60 two-qubit stabilizer states.
std::span<const GoldenState> two_qubit_golden();

}  // namespace stabgeo
