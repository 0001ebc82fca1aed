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


#include "stabgeo/fixtures.hpp"

namespace stabgeo {

namespace {

constexpr GoldenState kTwoQubit[] = {
    {"1 1 1 1", "IX XI", "pi/3"},
    {"1 -1 1 -1", "-IX XI", "pi/3"},
    {"1 1 -1 -1", "IX -XI", "pi/3"},
    {"1 -1 -1 1", "-IX -XI", "pi/3"},
    {"1 1 i i", "IX YI", "pi/3"},
    {"1 -1 i -i", "-IX YI", "pi/3"},
    {"1 1 -i -i", "IX -YI", "pi/3"},
    {"1 -1 -i i", "-IX -YI", "pi/3"},
    {"1 1 0 0", "IX ZI", "pi/4"},
    {"1 -1 0 0", "-IX ZI", "pi/4"},
    {"0 0 1 1", "IX -ZI", "perp"},
    {"0 0 1 -1", "-IX -ZI", "perp"},
    {"1 i 1 i", "IY XI", "pi/3"},
    {"1 -i 1 -i", "-IY XI", "pi/3"},
    {"1 i -1 -i", "IY -XI", "pi/3"},
    {"1 -i -1 i", "-IY -XI", "pi/3"},
    {"1 i i -1", "IY YI", "pi/3"},
    {"1 -i i 1", "-IY YI", "pi/3"},
    {"1 i -i 1", "IY -YI", "pi/3"},
    {"1 -i -i -1", "-IY -YI", "pi/3"},
    {"1 i 0 0", "IY ZI", "pi/4"},
    {"1 -i 0 0", "-IY ZI", "pi/4"},
    {"0 0 1 i", "IY -ZI", "perp"},
    {"0 0 1 -i", "-IY -ZI", "perp"},
    {"1 0 1 0", "IZ XI", "pi/4"},
    {"0 1 0 1", "-IZ XI", "perp"},
    {"1 0 -1 0", "IZ -XI", "pi/4"},
    {"0 1 0 -1", "-IZ -XI", "perp"},
    {"1 0 i 0", "IZ YI", "pi/4"},
    {"0 1 0 i", "-IZ YI", "perp"},
    {"1 0 -i 0", "IZ -YI", "pi/4"},
    {"0 1 0 -i", "-IZ -YI", "perp"},
    {"1 0 0 0", "IZ ZI", "0"},
    {"0 1 0 0", "-IZ ZI", "perp"},
    {"0 0 1 0", "IZ -ZI", "perp"},
    {"0 0 0 1", "-IZ -ZI", "perp"},
    {"0 1 1 0", "XX YY", "perp"},
    {"1 0 0 -1", "-XX YY", "pi/4"},
    {"1 0 0 1", "XX -YY", "pi/4"},
    {"0 1 -1 0", "-XX -YY", "perp"},
    {"1 0 0 i", "XY YX", "pi/4"},
    {"0 1 i 0", "-XY YX", "perp"},
    {"0 1 -i 0", "XY -YX", "perp"},
    {"1 0 0 -i", "-XY -YX", "pi/4"},
    {"1 1 1 -1", "XZ ZX", "pi/3"},
    {"1 1 -1 1", "-XZ ZX", "pi/3"},
    {"1 -1 1 1", "XZ -ZX", "pi/3"},
    {"1 -1 -1 -1", "-XZ -ZX", "pi/3"},
    {"1 i 1 -i", "XZ ZY", "pi/3"},
    {"1 i -1 i", "-XZ ZY", "pi/3"},
    {"1 -i 1 i", "XZ -ZY", "pi/3"},
    {"1 -i -1 -i", "-XZ -ZY", "pi/3"},
    {"1 1 i -i", "YZ ZX", "pi/3"},
    {"1 1 -i i", "-YZ ZX", "pi/3"},
    {"1 -1 i i", "YZ -ZX", "pi/3"},
    {"1 -1 -i -i", "-YZ -ZX", "pi/3"},
    {"1 i i 1", "YZ ZY", "pi/3"},
    {"1 i -i -1", "-YZ ZY", "pi/3"},
    {"1 -i i -1", "YZ -ZY", "pi/3"},
    {"1 -i -i 1", "-YZ -ZY", "pi/3"},
};

}  // namespace

std::span<const GoldenState> two_qubit_golden() { return kTwoQubit; }

}  // namespace stabgeo
