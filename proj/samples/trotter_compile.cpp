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

// Compile an evolution to gates, run it, and compare with the integrator.

#include <cstdio>

#include "adiaquant/adiaquant.hpp"

int main() {
    using namespace adiaquant;
    const SatInstance inst = make_three_bit_example();
    const double T = 10.0;
    const TrotterBudget budget = plan_budget(inst, T, 0.01);
    const GateSequence seq = compile(inst, T, budget);
    std::printf("M = %llu, K = %llu, %zu gates\n", static_cast<unsigned long long>(budget.M),
                static_cast<unsigned long long>(budget.K), static_cast<std::size_t>(seq.size()));

    const auto pair = OperatorPair::from_instance(inst);
    const StateVector gates = execute(seq, pair.initial_state());
    const StateVector exact = evolve(pair, Schedule::linear(T)).final_state;
    std::printf("fidelity against the integrator: %.6f\n", fidelity(gates, exact));
    return 0;
}
