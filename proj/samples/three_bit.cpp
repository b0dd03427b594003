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

// Three-bit walkthrough: classical answer, minimum gap, adiabatic run, measurement.

#include <cstdio>

#include "adiaquant/adiaquant.hpp"

int main() {
    using namespace adiaquant;
    const SatInstance inst = make_three_bit_example();
    const auto truth = brute_force_solve(inst);
    std::printf("satisfying assignment: %s\n", truth.minimizers.front().str().c_str());

    const auto pair = OperatorPair::from_instance(inst);
    const GapReport gap = find_min_gap(pair, SectorProjector::full());
    const AdiabaticEstimate est = adiabatic_time_estimate(pair, gap);
    std::printf("g_min = %.6f at s = %.4f, E/g^2 = %.3f\n", gap.g_min, gap.s_star, est.ratio);

    for (double T : {1.0, 10.0, 100.0}) {
        const auto r = evolve(pair, Schedule::linear(T));
        std::printf("T = %6.1f  overlap = %.6f  drift = %.2e\n", T, r.overlap, r.norm_drift);
    }

    const auto run = evolve(pair, Schedule::linear(100.0));
    for (const auto &[z, count] : tally(measure(run.final_state, inst.n(), 1000, 7))) {
        std::printf("  %s x %zu (energy %u)\n", bitstring(inst.n(), z).c_str(), count, inst.energy_index(z));
    }
    return 0;
}
