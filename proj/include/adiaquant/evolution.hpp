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

/**
 * @file
 * Schrodinger evolution i d/dt psi = H(s(t)) psi by fixed-step classical
 * Runge-Kutta, overlap with the final ground space, and measurement.
 *
 * The state is never renormalized; the norm drift is reported and checked.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/hamiltonian.hpp"

namespace adiaquant {

/// s(t) = profile(t / T); the default profile is the identity.
struct Schedule {
    double T = 0.0;
    std::function<double(double)> profile;

    static Schedule linear(double T) { return Schedule{T, {}}; }

    [[nodiscard]] double s_at(double t) const {
        if (T <= 0.0) {
            return 1.0;
        }
        const double x = std::clamp(t / T, 0.0, 1.0);
        return profile ? profile(x) : x;
    }
};

struct EvolutionOptions {
    /// Step size; 0 selects 0.01 / norm_bound.
    double dt = 0.0;
    double max_norm_drift = 1e-6;
};

struct EvolutionResult {
    StateVector final_state;
    /// sqrt of the total probability on the final ground space.
    double overlap = 0.0;
    double norm_drift = 0.0;
    double T = 0.0;
    std::size_t steps = 0;
    double dt = 0.0;
    /// True when the target ground energy is positive (no satisfying assignment).
    bool unsatisfiable = false;
    double ground_energy = 0.0;
};

namespace detail {

inline double ground_probability(const OperatorPair &pair, std::span<const cplx> psi) {
    double acc = 0.0;
    for (auto z : pair.ground_indices()) {
        acc += std::norm(psi[z]);
    }
    return acc;
}

inline double ground_energy_of(const OperatorPair &pair) { return pair.hp().min_value(); }

// Generic operators: project onto the lowest eigenspace of P = H(1).
template <class Op>
double ground_probability(const Op &op, std::span<const cplx> psi) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense(1.0));
    const double e0 = es.eigenvalues()(0);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
        if (es.eigenvalues()(j) - e0 > 1e-9 * std::max(1.0, std::abs(e0))) {
            break;
        }
        cplx c{0.0, 0.0};
        for (std::size_t i = 0; i < psi.size(); ++i) {
            c += es.eigenvectors()(static_cast<Eigen::Index>(i), j) * psi[i];
        }
        acc += std::norm(c);
    }
    return acc;
}

template <class Op>
double ground_energy_of(const Op &op) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.dense(1.0), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

} // namespace detail

/// Probability-amplitude overlap of psi with the ground space of H(1).
template <InterpolatedOperator Op>
double ground_overlap(const Op &op, const StateVector &psi) {
    if (psi.size() != op.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "state size does not match operator dimension");
    }
    return std::sqrt(detail::ground_probability(op, psi.span()));
}

/// Integrates from an explicit starting state.
template <InterpolatedOperator Op>
EvolutionResult evolve(const Op &op, const Schedule &sched, const StateVector &start,
                       const EvolutionOptions &options = {}) {
    if (start.size() != op.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "initial state size does not match operator dimension");
    }
    if (sched.T < 0.0 || !std::isfinite(sched.T)) {
        throw Error(ErrorKind::InvalidArgument, "total time T must be finite and nonnegative");
    }
    const double bound = op.norm_bound();
    double dt = options.dt > 0.0 ? options.dt : 0.01 / std::max(bound, 1e-12);
    if (options.dt < 0.0) {
        throw Error(ErrorKind::StepSize, "dt must be positive");
    }
    if (dt * bound > 0.1 + 1e-12) {
        throw Error(ErrorKind::StepSize, "dt * ||H|| exceeds 0.1; use dt <= " + std::to_string(0.1 / bound));
    }
    const std::size_t steps = sched.T > 0.0 ? static_cast<std::size_t>(std::ceil(sched.T / dt - 1e-9)) : 0;
    if (steps > 0) {
        dt = sched.T / static_cast<double>(steps);
    }

    const std::size_t dim = op.dimension();
    std::vector<cplx> psi = start.amplitudes();
    std::vector<cplx> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    const cplx minus_i{0.0, -1.0};
    auto deriv = [&](double t, const std::vector<cplx> &x, std::vector<cplx> &out) {
        op.apply(sched.s_at(t), std::span<const cplx>(x), std::span<cplx>(out));
        for (auto &v : out) {
            v *= minus_i;
        }
    };
    for (std::size_t step = 0; step < steps; ++step) {
        const double t = dt * static_cast<double>(step);
        deriv(t, psi, k1);
        for (std::size_t i = 0; i < dim; ++i) {
            tmp[i] = psi[i] + 0.5 * dt * k1[i];
        }
        deriv(t + 0.5 * dt, tmp, k2);
        for (std::size_t i = 0; i < dim; ++i) {
            tmp[i] = psi[i] + 0.5 * dt * k2[i];
        }
        deriv(t + 0.5 * dt, tmp, k3);
        for (std::size_t i = 0; i < dim; ++i) {
            tmp[i] = psi[i] + dt * k3[i];
        }
        deriv(t + dt, tmp, k4);
        for (std::size_t i = 0; i < dim; ++i) {
            psi[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }

    EvolutionResult result;
    result.final_state = StateVector::unchecked(std::move(psi));
    result.norm_drift = std::abs(result.final_state.norm() - start.norm());
    result.T = sched.T;
    result.steps = steps;
    result.dt = dt;
    if (result.norm_drift > options.max_norm_drift) {
        throw Error(ErrorKind::StepSize, "norm drift " + std::to_string(result.norm_drift) +
                                             " exceeds the bound; retry with a smaller dt");
    }
    result.ground_energy = detail::ground_energy_of(op);
    result.unsatisfiable = result.ground_energy > 1e-9;
    result.overlap = ground_overlap(op, result.final_state);
    return result;
}

/// Integrates from the ground state of H(0).
template <InterpolatedOperator Op>
EvolutionResult evolve(const Op &op, const Schedule &sched, const EvolutionOptions &options = {}) {
    return evolve(op, sched, op.initial_state(), options);
}

/// <psi| H_P |psi>.
inline double expected_energy(const OperatorPair &pair, const StateVector &psi) {
    double acc = 0.0;
    for (std::size_t z = 0; z < psi.size(); ++z) {
        acc += std::norm(psi[z]) * pair.hp().values[z];
    }
    return acc;
}

/// i.i.d. samples from |psi_z|^2, reproducible for a given seed.
inline std::vector<BasisIndex> measure(const StateVector &psi, unsigned n, std::size_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw Error(ErrorKind::InvalidArgument, "shots must be at least 1");
    }
    if (n >= 64 || psi.size() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::DimensionMismatch, "state size is not 2^n");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-6) {
        throw Error(ErrorKind::InvalidState, "cannot measure an unnormalized state");
    }
    std::vector<double> cdf(psi.size());
    double acc = 0.0;
    for (std::size_t z = 0; z < psi.size(); ++z) {
        acc += std::norm(psi[z]);
        cdf[z] = acc;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, acc);
    std::vector<BasisIndex> out;
    out.reserve(shots);
    for (std::size_t k = 0; k < shots; ++k) {
        const double u = uni(rng);
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto z = static_cast<BasisIndex>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
        // never land on a zero-probability state through rounding at the boundary
        while (z > 0 && std::norm(psi[z]) == 0.0) {
            --z;
        }
        out.push_back(z);
    }
    return out;
}

inline std::map<BasisIndex, std::size_t> tally(const std::vector<BasisIndex> &samples) {
    std::map<BasisIndex, std::size_t> counts;
    for (auto z : samples) {
        ++counts[z];
    }
    return counts;
}

/// Lines "<bitstring> <count>" in basis-index order.
inline void write_counts(std::ostream &os, const std::map<BasisIndex, std::size_t> &counts, unsigned n) {
    for (const auto &[z, c] : counts) {
        os << bitstring(n, z) << ' ' << c << '\n';
    }
}

struct SuccessPoint {
    double T = 0.0;
    double overlap = 0.0;
    double norm_drift = 0.0;
};

/// One evolve per T, run concurrently. dt_rule(T) <= 0 selects the default step.
template <InterpolatedOperator Op>
std::vector<SuccessPoint> success_curve(const Op &op, const std::vector<double> &T_values,
                                        const std::function<double(double)> &dt_rule = {}) {
    if (T_values.empty()) {
        throw Error(ErrorKind::InvalidArgument, "success_curve needs at least one T");
    }
    for (double T : T_values) {
        if (!(T > 0.0)) {
            throw Error(ErrorKind::InvalidArgument, "success_curve needs positive T values");
        }
    }
    std::vector<SuccessPoint> out(T_values.size());
    parallel_for(T_values.size(), [&](std::size_t i) {
        EvolutionOptions opt;
        opt.dt = dt_rule ? dt_rule(T_values[i]) : 0.0;
        auto r = evolve(op, Schedule::linear(T_values[i]), opt);
        out[i] = SuccessPoint{T_values[i], r.overlap, r.norm_drift};
    });
    return out;
}

inline void write_success_csv(std::ostream &os, const std::vector<SuccessPoint> &curve) {
    os << "T,overlap,norm_drift\n";
    char buf[128];
    for (const auto &p : curve) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", p.T, p.overlap, p.norm_drift);
        os << buf;
    }
}

} // namespace adiaquant
