// Copyright 2026 The adiaquant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Ring of agree clauses: closed-form gap against the numerically computed one.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "adiaquant/adiaquant.hpp"

int main() {
    using namespace adiaquant;
    for (unsigned n : {6u, 8u, 10u}) {
        const auto pair = OperatorPair::from_instance(make_ring(n));
        const GapReport numeric = find_min_gap(pair, SectorProjector::global_negation(), 64);
        const RingGap exact = ring_gap(n);
        std::printf("n = %2u  analytic %.10f  sector %.10f  s* %.4f\n", n, exact.g_min, numeric.g_min, exact.s_star);
    }
    for (unsigned n : {50u, 100u, 200u}) {
        const RingGap g = ring_gap(n);
        std::printf("n = %3u  g_min = %.6f  4pi/3n = %.6f\n", n, g.g_min, 4.0 * std::numbers::pi / (3.0 * n));
    }
    return 0;
}
