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
 * Full-register Hamiltonians for an instance: the diagonal problem part,
 * the transverse driver, and their linear interpolation
 *
 *     H(s) = (1 - s) H_B + s H_P,   H_B = sum_i d_i (1 - sigma_x^(i)) / 2.
 *
 * Operators are stored structurally (a diagonal plus one weight per bit) and
 * applied matrix-free in O(n 2^n). Dense matrices are only produced on
 * request for small registers.
 */

#pragma once

#include <cmath>
#include <concepts>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/common.hpp"
#include "adiaquant/instance.hpp"

namespace adiaquant {

/// Largest dimension for which dense() is allowed on full-register operators.
inline constexpr std::size_t kDenseDimensionCap = 1u << 13;

/**
 * Anything that behaves like (1 - s) B + s P on a real vector space: it can
 * act on real and complex vectors and bound its own operator norm for every
 * s in [0, 1].
 */
template <class Op>
concept InterpolatedOperator =
    requires(const Op &op, double s, std::span<const double> rin, std::span<double> rout,
             std::span<const cplx> cin, std::span<cplx> cout) {
        { op.dimension() } -> std::convertible_to<std::size_t>;
        op.apply(s, rin, rout);
        op.apply(s, cin, cout);
        { op.dense(s) } -> std::convertible_to<Eigen::MatrixXd>;
        { op.norm_bound() } -> std::convertible_to<double>;
    };

/// Complex amplitudes over the computational basis.
class StateVector {
  public:
    StateVector() = default;

    /// Throws InvalidState unless the vector has unit norm to 1e-12.
    explicit StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
        if (std::abs(norm() - 1.0) > 1e-12) {
            throw Error(ErrorKind::InvalidState, "state vector is not normalized");
        }
    }

    /// Wraps amplitudes without a normalization check (integrator output).
    static StateVector unchecked(std::vector<cplx> amplitudes) {
        StateVector v;
        v.amps_ = std::move(amplitudes);
        return v;
    }

    static StateVector basis(std::size_t dim, std::size_t index) {
        std::vector<cplx> a(dim, cplx{0.0, 0.0});
        a.at(index) = 1.0;
        return StateVector(std::move(a));
    }

    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] const cplx &operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] cplx &operator[](std::size_t i) { return amps_[i]; }
    [[nodiscard]] std::span<const cplx> span() const { return amps_; }
    [[nodiscard]] std::span<cplx> span() { return amps_; }
    [[nodiscard]] const std::vector<cplx> &amplitudes() const { return amps_; }

    [[nodiscard]] double norm() const {
        double acc = 0.0;
        for (const auto &a : amps_) {
            acc += std::norm(a);
        }
        return std::sqrt(acc);
    }

  private:
    std::vector<cplx> amps_;
};

inline cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "inner product of vectors with different sizes");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

/// Diagonal problem Hamiltonian; values[z] = number of clauses violated by z.
struct DiagonalOperator {
    unsigned n = 0;
    std::vector<double> values;

    [[nodiscard]] std::size_t dimension() const { return values.size(); }
    [[nodiscard]] double max_value() const {
        return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    }
    [[nodiscard]] double min_value() const {
        return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
    }
};

/// H_B = sum_i weights[i-1] (1 - sigma_x^(i)) / 2.
struct TransverseOperator {
    unsigned n = 0;
    std::vector<double> weights;

    [[nodiscard]] double total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }
};

enum class InitialMode { ClauseWeighted, Uniform };

inline DiagonalOperator build_problem_hamiltonian(const SatInstance &inst, const Limits &limits = {}) {
    require_qubits(inst.n(), limits.max_qubits, "build_problem_hamiltonian");
    DiagonalOperator hp;
    hp.n = inst.n();
    const std::size_t dim = std::size_t{1} << inst.n();
    hp.values.resize(dim);
    parallel_chunks(dim, 1u << 12, [&](std::size_t begin, std::size_t end) {
        for (std::size_t z = begin; z < end; ++z) {
            hp.values[z] = static_cast<double>(inst.energy_index(z));
        }
    });
    return hp;
}

inline TransverseOperator build_initial_hamiltonian(const SatInstance &inst,
                                                    InitialMode mode = InitialMode::ClauseWeighted) {
    TransverseOperator hb;
    hb.n = inst.n();
    if (mode == InitialMode::Uniform) {
        hb.weights.assign(inst.n(), 1.0);
        return hb;
    }
    auto d = inst.degrees();
    hb.weights.assign(d.begin(), d.end());
    return hb;
}

/// Uniform superposition 2^(-n/2) sum_z |z>, the ground state of every H_B.
inline StateVector initial_state(unsigned n, const Limits &limits = {}) {
    require_qubits(n, limits.max_qubits, "initial_state");
    const std::size_t dim = std::size_t{1} << n;
    return StateVector::unchecked(std::vector<cplx>(dim, cplx{std::pow(2.0, -0.5 * n), 0.0}));
}

/**
 * The interpolating Hamiltonian of an instance on the full 2^n register.
 * Satisfies InterpolatedOperator.
 */
class OperatorPair {
  public:
    OperatorPair() = default;

    OperatorPair(TransverseOperator hb, DiagonalOperator hp) : hb_(std::move(hb)), hp_(std::move(hp)) {
        if (hb_.n != hp_.n || hp_.values.size() != (std::size_t{1} << hp_.n) || hb_.weights.size() != hb_.n) {
            throw Error(ErrorKind::DimensionMismatch, "driver and problem Hamiltonians disagree on n");
        }
    }

    static OperatorPair from_instance(const SatInstance &inst, InitialMode mode = InitialMode::ClauseWeighted,
                                      const Limits &limits = {}) {
        return OperatorPair(build_initial_hamiltonian(inst, mode), build_problem_hamiltonian(inst, limits));
    }

    [[nodiscard]] unsigned n() const { return hp_.n; }
    [[nodiscard]] std::size_t dimension() const { return hp_.values.size(); }
    [[nodiscard]] const TransverseOperator &hb() const { return hb_; }
    [[nodiscard]] const DiagonalOperator &hp() const { return hp_; }

    /// Upper bound on ||H(s)|| for s in [0,1]: sum d_i + max h.
    [[nodiscard]] double norm_bound() const { return hb_.total_weight() + hp_.max_value(); }

    template <class T>
    void apply(double s, std::span<const T> in, std::span<T> out) const {
        const std::size_t dim = dimension();
        if (in.size() != dim || out.size() != dim) {
            throw Error(ErrorKind::DimensionMismatch, "vector size does not match operator dimension");
        }
        const unsigned n = hp_.n;
        const double driver = 1.0 - s;
        const double diag_shift = 0.5 * driver * hb_.total_weight();
        std::vector<std::pair<BasisIndex, double>> flips;
        flips.reserve(n);
        for (unsigned k = 1; k <= n; ++k) {
            if (hb_.weights[k - 1] != 0.0) {
                flips.emplace_back(bit_mask(n, k), -0.5 * driver * hb_.weights[k - 1]);
            }
        }
        parallel_chunks(dim, 1u << 14, [&](std::size_t begin, std::size_t end) {
            for (std::size_t z = begin; z < end; ++z) {
                T acc = (s * hp_.values[z] + diag_shift) * in[z];
                for (const auto &[mask, coef] : flips) {
                    acc += coef * in[z ^ mask];
                }
                out[z] = acc;
            }
        });
    }

    [[nodiscard]] Eigen::MatrixXd dense(double s) const {
        const std::size_t dim = dimension();
        if (dim > kDenseDimensionCap) {
            throw Error(ErrorKind::Capacity, "dense matrix requested for a register that is too large");
        }
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        const unsigned n = hp_.n;
        const double driver = 1.0 - s;
        for (std::size_t z = 0; z < dim; ++z) {
            auto zi = static_cast<Eigen::Index>(z);
            h(zi, zi) = s * hp_.values[z] + 0.5 * driver * hb_.total_weight();
            for (unsigned k = 1; k <= n; ++k) {
                h(zi, static_cast<Eigen::Index>(z ^ bit_mask(n, k))) -= 0.5 * driver * hb_.weights[k - 1];
            }
        }
        return h;
    }

    /// Ground state of H_B.
    [[nodiscard]] StateVector initial_state() const { return adiaquant::initial_state(hp_.n, Limits{64, 64}); }

    /// Basis states minimizing H_P.
    [[nodiscard]] std::vector<BasisIndex> ground_indices() const {
        std::vector<BasisIndex> out;
        const double lo = hp_.min_value();
        for (std::size_t z = 0; z < hp_.values.size(); ++z) {
            if (hp_.values[z] == lo) {
                out.push_back(z);
            }
        }
        return out;
    }

  private:
    TransverseOperator hb_;
    DiagonalOperator hp_;
};

static_assert(InterpolatedOperator<OperatorPair>);

/**
 * (1 - s) B + s P for explicitly stored symmetric matrices. Used for the
 * reduced family operators and for hand-written few-level examples.
 */
class MatrixPair {
  public:
    MatrixPair() = default;

    MatrixPair(Eigen::MatrixXd b, Eigen::MatrixXd p, std::string label = "dense")
        : b_(std::move(b)), p_(std::move(p)), label_(std::move(label)) {
        if (b_.rows() != b_.cols() || p_.rows() != p_.cols() || b_.rows() != p_.rows()) {
            throw Error(ErrorKind::DimensionMismatch, "B and P must be square matrices of equal size");
        }
        if (!b_.isApprox(b_.transpose(), 1e-14) || !p_.isApprox(p_.transpose(), 1e-14)) {
            throw Error(ErrorKind::InvalidArgument, "B and P must be symmetric");
        }
        norm_bound_ = b_.cwiseAbs().rowwise().sum().maxCoeff() + p_.cwiseAbs().rowwise().sum().maxCoeff();
    }

    [[nodiscard]] std::size_t dimension() const { return static_cast<std::size_t>(b_.rows()); }
    [[nodiscard]] const Eigen::MatrixXd &b() const { return b_; }
    [[nodiscard]] const Eigen::MatrixXd &p() const { return p_; }
    [[nodiscard]] const std::string &label() const { return label_; }
    [[nodiscard]] double norm_bound() const { return norm_bound_; }

    [[nodiscard]] Eigen::MatrixXd dense(double s) const { return (1.0 - s) * b_ + s * p_; }

    template <class T>
    void apply(double s, std::span<const T> in, std::span<T> out) const {
        using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
        if (in.size() != dimension() || out.size() != dimension()) {
            throw Error(ErrorKind::DimensionMismatch, "vector size does not match operator dimension");
        }
        Eigen::Map<const Vec> x(in.data(), static_cast<Eigen::Index>(in.size()));
        Eigen::Map<Vec> y(out.data(), static_cast<Eigen::Index>(out.size()));
        y.noalias() = (1.0 - s) * (b_.template cast<T>() * x) + s * (p_.template cast<T>() * x);
    }

    /// Lowest eigenvector of B with a nonnegative first nonzero entry.
    [[nodiscard]] StateVector initial_state() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b_);
        Eigen::VectorXd v = es.eigenvectors().col(0);
        Eigen::Index lead = 0;
        v.cwiseAbs().maxCoeff(&lead);
        if (v(lead) < 0) {
            v = -v;
        }
        std::vector<cplx> a(dimension());
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = v(static_cast<Eigen::Index>(i));
        }
        return StateVector::unchecked(std::move(a));
    }

  private:
    Eigen::MatrixXd b_;
    Eigen::MatrixXd p_;
    std::string label_;
    double norm_bound_ = 0.0;
};

static_assert(InterpolatedOperator<MatrixPair>);

/// H(s) psi, matrix-free.
inline StateVector apply_interpolated(const OperatorPair &pair, double s, const StateVector &psi) {
    if (psi.size() != pair.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "state size does not match operator dimension");
    }
    std::vector<cplx> out(psi.size());
    pair.apply<cplx>(s, psi.span(), std::span<cplx>(out));
    return StateVector::unchecked(std::move(out));
}

/// One clause's share of H(s), acting on its own bits (first listed bit most significant).
struct LocalTerm {
    std::vector<unsigned> bits;
    Eigen::MatrixXd matrix;
};

/**
 * Per-clause decomposition H(s) = sum_C [(1-s) H_B,C + s H_P,C] with
 * H_B,C = sum over the clause's distinct bits of (1 - sigma_x)/2. Summed over
 * clauses this reproduces the clause-weighted driver.
 */
inline std::vector<LocalTerm> clause_local_terms(const SatInstance &inst, double s) {
    const unsigned n = inst.n();
    std::vector<LocalTerm> terms;
    terms.reserve(inst.m());
    for (const auto &c : inst.clauses()) {
        if (std::holds_alternative<clause::GroverOracle>(c)) {
            throw Error(ErrorKind::Unsupported, "the grover oracle has no few-bit decomposition");
        }
        LocalTerm term;
        term.bits = clause_bits(c, n);
        const unsigned k = static_cast<unsigned>(term.bits.size());
        const Eigen::Index dim = Eigen::Index{1} << k;
        term.matrix = Eigen::MatrixXd::Zero(dim, dim);
        for (Eigen::Index local = 0; local < dim; ++local) {
            BasisIndex global = 0;
            for (unsigned r = 0; r < k; ++r) {
                if ((local >> (k - 1 - r)) & 1) {
                    global |= bit_mask(n, term.bits[r]);
                }
            }
            term.matrix(local, local) += s * clause_energy_index(c, n, global) + 0.5 * (1.0 - s) * k;
            for (unsigned r = 0; r < k; ++r) {
                term.matrix(local, local ^ (Eigen::Index{1} << (k - 1 - r))) -= 0.5 * (1.0 - s);
            }
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

struct GaugeResult {
    SatInstance all_agree;
    Assignment mask;  // bits flipped by the transform; a satisfying assignment of the input
};

/**
 * Maps an agree/disagree ring with an even number of disagree clauses onto
 * the all-agree ring: h_agree(z XOR mask) == h_input(z) for every z.
 */
inline GaugeResult gauge_transform_ring(const SatInstance &inst) {
    const unsigned n = inst.n();
    if (inst.m() != n || n < 3) {
        throw Error(ErrorKind::InvalidArgument, "not a ring: need n clauses on n >= 3 bits");
    }
    std::vector<bool> disagree(n);
    for (unsigned j = 1; j <= n; ++j) {
        const auto &c = inst.clauses()[j - 1];
        unsigned next = j % n + 1;
        auto on_edge = [&](unsigned a, unsigned b) { return (a == j && b == next) || (a == next && b == j); };
        if (const auto *ag = std::get_if<clause::Agree>(&c); ag && on_edge(ag->i, ag->j)) {
            disagree[j - 1] = false;
        } else if (const auto *dg = std::get_if<clause::Disagree>(&c); dg && on_edge(dg->i, dg->j)) {
            disagree[j - 1] = true;
        } else {
            throw Error(ErrorKind::InvalidArgument,
                        "not a ring: clause " + std::to_string(j) + " must be agree/disagree on bits (" +
                            std::to_string(j) + "," + std::to_string(next) + ")");
        }
    }
    if (std::count(disagree.begin(), disagree.end(), true) % 2 != 0) {
        throw Error(ErrorKind::NoSatisfyingAssignment, "odd number of disagree clauses");
    }
    GaugeResult result{make_ring(n), Assignment{}};
    result.mask.bits.assign(n, 0);
    for (unsigned j = 1; j < n; ++j) {
        result.mask.bits[j] = static_cast<std::uint8_t>(result.mask.bits[j - 1] ^ (disagree[j - 1] ? 1 : 0));
    }
    return result;
}

} // namespace adiaquant
