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

// Gap scaling in the symmetric subspace for the structured families.

#include <cmath>
#include <cstdio>

#include "adiaquant/adiaquant.hpp"

int main() {
    using namespace adiaquant;
    for (unsigned n = 8; n <= 32; n += 8) {
        const GapReport r = family_gap(Family::Grover, n);
        const SecularSolution sec = grover_secular(n);
        std::printf("grover n = %2u  g_min 2^(n/2) = %.4f  secular gap = %.4e  s* = %.4f\n", n,
                    r.g_min * std::exp2(n / 2.0), sec.gap_exact, sec.s_star);
    }
    const ScalingStudy bush = gap_scaling_study(Family::Bush, {20, 40, 60, 80});
    std::printf("bush log-log slope over n = 20..80: %.3f\n", bush.power_law.slope);
    return 0;
}
