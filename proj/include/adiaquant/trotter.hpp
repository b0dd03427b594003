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
 * Gate-model recasting of the adiabatic evolution. The interval [0, T] is cut
 * into M slices of length Delta = T / M; slice l uses u = 1 - l/M and
 * v = l/M, and is approximated by K first-order Trotter steps
 *
 *     (exp(-i Delta u H_B / K) exp(-i Delta v H_P / K))^K.
 *
 * The driver factor is a product of n one-bit rotations, the problem factor a
 * product of one diagonal phase per clause.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/hamiltonian.hpp"

namespace adiaquant {

struct Gate {
    enum class Kind { OneBitTransverse, ClausePhase };
    Kind kind = Kind::OneBitTransverse;
    /// 1-based bit (transverse) or clause (phase) index.
    unsigned index = 1;
    double angle = 0.0;

    [[nodiscard]] Gate inverse() const { return Gate{kind, index, -angle}; }
    bool operator==(const Gate &) const = default;
};

struct TrotterBudget {
    std::uint64_t M = 1;
    std::uint64_t K = 1;
    double T = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
    double safety = 1.0;
    double hb_bound = 0.0;  // sum d_i
    double hp_bound = 0.0;  // clause count
    /// Delta (||H_B|| + ||H_P||) and the limit it must meet, 2 sqrt(epsilon).
    double slicing_surrogate = 0.0;
    double slicing_limit = 0.0;
    /// safety * M * (1 + Delta ||H_B|| + Delta ||H_P||)^2; K is the next power of two.
    double substep_requirement = 0.0;
};

namespace detail {

inline double driver_bound(const SatInstance &inst) {
    double acc = 0.0;
    for (auto d : inst.degrees()) {
        acc += d;
    }
    return acc;
}

inline std::uint64_t next_pow2(double x) {
    std::uint64_t p = 1;
    while (static_cast<double>(p) < x) {
        p <<= 1;
        if (p == 0) {
            throw Error(ErrorKind::Capacity, "Trotter budget overflows 64 bits");
        }
    }
    return p;
}

} // namespace detail

/**
 * Smallest powers of two M, K with Delta (sum d + m) <= 2 sqrt(epsilon) and
 * K >= safety * M (1 + Delta sum d + Delta m)^2.
 */
inline TrotterBudget plan_budget(const SatInstance &inst, double T, double epsilon, double safety = 1.0) {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw Error(ErrorKind::InvalidArgument, "T must be positive");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1)");
    }
    if (!(safety > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "safety factor must be positive");
    }
    TrotterBudget b;
    b.T = T;
    b.epsilon = epsilon;
    b.safety = safety;
    b.hb_bound = detail::driver_bound(inst);
    b.hp_bound = static_cast<double>(inst.m());
    b.slicing_limit = 2.0 * std::sqrt(epsilon);
    const double norm = b.hb_bound + b.hp_bound;
    b.M = detail::next_pow2(T * norm / b.slicing_limit);
    b.delta = T / static_cast<double>(b.M);
    b.slicing_surrogate = b.delta * norm;
    const double growth = 1.0 + b.delta * b.hb_bound + b.delta * b.hp_bound;
    b.substep_requirement = safety * static_cast<double>(b.M) * growth * growth;
    b.K = detail::next_pow2(b.substep_requirement);
    return b;
}

/**
 * The compiled product, generated on demand: gate i lives in layer
 * i / (n + m), which is slice l = layer / K. Angles are kept as integer
 * multiples of Delta / (K M) until read.
 */
class GateSequence {
  public:
    GateSequence() = default;

    GateSequence(SatInstance inst, double T, std::uint64_t M, std::uint64_t K)
        : inst_(std::move(inst)), T_(T), M_(M), K_(K) {
        if (M_ == 0 || K_ == 0) {
            throw Error(ErrorKind::InvalidArgument, "M and K must be positive");
        }
        degrees_ = inst_.degrees();
    }

    [[nodiscard]] const SatInstance &instance() const { return inst_; }
    [[nodiscard]] unsigned n() const { return inst_.n(); }
    [[nodiscard]] std::size_t m() const { return inst_.m(); }
    [[nodiscard]] std::uint64_t M() const { return M_; }
    [[nodiscard]] std::uint64_t K() const { return K_; }
    [[nodiscard]] double T() const { return T_; }
    [[nodiscard]] double delta() const { return T_ / static_cast<double>(M_); }
    [[nodiscard]] std::uint64_t layer_size() const { return inst_.n() + inst_.m(); }
    [[nodiscard]] std::uint64_t size() const { return M_ * K_ * layer_size(); }

    [[nodiscard]] Gate operator[](std::uint64_t i) const {
        const std::uint64_t layer = i / layer_size();
        const std::uint64_t pos = i % layer_size();
        return gate(layer / K_, pos);
    }

    /// Gate at position pos of any layer belonging to slice l.
    [[nodiscard]] Gate gate(std::uint64_t l, std::uint64_t pos) const {
        const double unit = delta() / static_cast<double>(K_) / static_cast<double>(M_);
        if (pos < inst_.n()) {
            const double num = static_cast<double>(degrees_[pos]) * static_cast<double>(M_ - l);
            return Gate{Gate::Kind::OneBitTransverse, static_cast<unsigned>(pos + 1), unit * num};
        }
        return Gate{Gate::Kind::ClausePhase, static_cast<unsigned>(pos - inst_.n() + 1),
                    unit * static_cast<double>(l)};
    }

    class iterator {
      public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Gate;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Gate;

        iterator() = default;
        iterator(const GateSequence *seq, std::uint64_t i) : seq_(seq), i_(i) {}
        Gate operator*() const { return (*seq_)[i_]; }
        iterator &operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++i_;
            return t;
        }
        bool operator==(const iterator &o) const { return i_ == o.i_; }

      private:
        const GateSequence *seq_ = nullptr;
        std::uint64_t i_ = 0;
    };

    [[nodiscard]] iterator begin() const { return iterator(this, 0); }
    [[nodiscard]] iterator end() const { return iterator(this, size()); }

    [[nodiscard]] std::vector<Gate> to_vector() const { return std::vector<Gate>(begin(), end()); }

  private:
    SatInstance inst_{1, {}};
    double T_ = 0.0;
    std::uint64_t M_ = 1;
    std::uint64_t K_ = 1;
    std::vector<unsigned> degrees_;
};

/// Compiles with the clause-weighted driver. A Grover oracle becomes one n-bit phase.
inline GateSequence compile(const SatInstance &inst, double T, const TrotterBudget &budget) {
    if (budget.M == 0 || budget.K == 0) {
        throw Error(ErrorKind::InvalidArgument, "budget must have positive M and K");
    }
    return GateSequence(inst, T, budget.M, budget.K);
}

/// Applies gates to a state; clause phases use the instance's clause table.
class GateExecutor {
  public:
    explicit GateExecutor(const SatInstance &inst) : inst_(inst) {
        const std::size_t dim = std::size_t{1} << inst.n();
        violating_.resize(inst.m());
        for (std::size_t c = 0; c < inst.m(); ++c) {
            for (std::size_t z = 0; z < dim; ++z) {
                if (clause_energy_index(inst.clauses()[c], inst.n(), z) != 0) {
                    violating_[c].push_back(z);
                }
            }
        }
    }

    void apply(const Gate &g, std::vector<cplx> &psi) const {
        const unsigned n = inst_.n();
        if (g.kind == Gate::Kind::OneBitTransverse) {
            if (g.index < 1 || g.index > n) {
                throw Error(ErrorKind::InvalidArgument, "xrot bit index out of range");
            }
            // exp(-i theta (1 - sigma_x)/2) = exp(-i theta/2) (cos(theta/2) + i sin(theta/2) sigma_x)
            const cplx phase = std::polar(1.0, -0.5 * g.angle);
            const cplx c = phase * std::cos(0.5 * g.angle);
            const cplx s = phase * cplx{0.0, std::sin(0.5 * g.angle)};
            const BasisIndex mask = bit_mask(n, g.index);
            for (std::size_t z = 0; z < psi.size(); ++z) {
                if ((z & mask) == 0) {
                    const cplx a = psi[z], b = psi[z | mask];
                    psi[z] = c * a + s * b;
                    psi[z | mask] = c * b + s * a;
                }
            }
        } else {
            if (g.index < 1 || g.index > violating_.size()) {
                throw Error(ErrorKind::InvalidArgument, "cphase clause index out of range");
            }
            const cplx phase = std::polar(1.0, -g.angle);
            for (auto z : violating_[g.index - 1]) {
                psi[z] *= phase;
            }
        }
    }

  private:
    const SatInstance &inst_;
    std::vector<std::vector<BasisIndex>> violating_;
};

/// Runs any range of gates, in order.
template <class Range>
StateVector execute(const SatInstance &inst, const Range &gates, const StateVector &psi) {
    if (psi.size() != (std::size_t{1} << inst.n())) {
        throw Error(ErrorKind::DimensionMismatch, "state size does not match the instance register");
    }
    GateExecutor exec(inst);
    std::vector<cplx> out = psi.amplitudes();
    for (const Gate &g : gates) {
        exec.apply(g, out);
    }
    return StateVector::unchecked(std::move(out));
}

inline StateVector execute(const GateSequence &seq, const StateVector &psi) {
    if (psi.size() != (std::size_t{1} << seq.n())) {
        throw Error(ErrorKind::DimensionMismatch, "state size does not match the sequence register");
    }
    GateExecutor exec(seq.instance());
    std::vector<cplx> out = psi.amplitudes();
    std::vector<Gate> layer(seq.layer_size());
    for (std::uint64_t l = 0; l < seq.M(); ++l) {
        for (std::uint64_t pos = 0; pos < layer.size(); ++pos) {
            layer[pos] = seq.gate(l, pos);
        }
        for (std::uint64_t k = 0; k < seq.K(); ++k) {
            for (const auto &g : layer) {
                exec.apply(g, out);
            }
        }
    }
    return StateVector::unchecked(std::move(out));
}

/// |<a|b>| for unit vectors.
inline double fidelity(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "fidelity of states with different sizes");
    }
    if (std::abs(a.norm() - 1.0) > 1e-6 || std::abs(b.norm() - 1.0) > 1e-6) {
        throw Error(ErrorKind::InvalidState, "fidelity needs normalized states");
    }
    return std::min(1.0, std::abs(inner(a.span(), b.span())));
}

/// prod_l exp(-i Delta H(l / M)) applied exactly, through dense diagonalization.
inline StateVector slice_exact_evolution(const OperatorPair &pair, double T, std::uint64_t M, const StateVector &psi) {
    const double delta = T / static_cast<double>(M);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.size()));
    for (std::size_t i = 0; i < psi.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = psi[i];
    }
    for (std::uint64_t l = 0; l < M; ++l) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pair.dense(static_cast<double>(l) / static_cast<double>(M)));
        Eigen::VectorXcd c = es.eigenvectors().transpose().cast<cplx>() * v;
        for (Eigen::Index j = 0; j < c.size(); ++j) {
            c(j) *= std::polar(1.0, -delta * es.eigenvalues()(j));
        }
        v = es.eigenvectors().cast<cplx>() * c;
    }
    std::vector<cplx> out(psi.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = v(static_cast<Eigen::Index>(i));
    }
    return StateVector::unchecked(std::move(out));
}

/// Header `trotter n m M K T`, then one `xrot <bit> <theta>` / `cphase <clause> <phi>` line per gate.
inline void write_sequence(std::ostream &os, const GateSequence &seq) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "trotter %u %zu %llu %llu %.17g\n", seq.n(), seq.m(),
                  static_cast<unsigned long long>(seq.M()), static_cast<unsigned long long>(seq.K()), seq.T());
    os << buf;
    for (std::uint64_t l = 0; l < seq.M(); ++l) {
        std::string layer;
        for (std::uint64_t pos = 0; pos < seq.layer_size(); ++pos) {
            const Gate g = seq.gate(l, pos);
            std::snprintf(buf, sizeof buf, "%s %u %.17g\n",
                          g.kind == Gate::Kind::OneBitTransverse ? "xrot" : "cphase", g.index, g.angle);
            layer += buf;
        }
        for (std::uint64_t k = 0; k < seq.K(); ++k) {
            os << layer;
        }
    }
}

struct SequenceFile {
    unsigned n = 0;
    std::size_t m = 0;
    std::uint64_t M = 0;
    std::uint64_t K = 0;
    double T = 0.0;
    std::vector<Gate> gates;
};

inline SequenceFile read_sequence(std::istream &is) {
    SequenceFile f;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (!header) {
            if (word != "trotter" || !(ls >> f.n >> f.m >> f.M >> f.K >> f.T)) {
                throw ParseError(lineno, "expected header 'trotter <n> <m> <M> <K> <T>'");
            }
            header = true;
            continue;
        }
        Gate g;
        if (word == "xrot") {
            g.kind = Gate::Kind::OneBitTransverse;
        } else if (word == "cphase") {
            g.kind = Gate::Kind::ClausePhase;
        } else {
            throw ParseError(lineno, "unknown gate '" + word + "'");
        }
        if (!(ls >> g.index >> g.angle)) {
            throw ParseError(lineno, "expected '<index> <angle>'");
        }
        f.gates.push_back(g);
    }
    if (!header) {
        throw ParseError(lineno + 1, "missing trotter header");
    }
    return f;
}

} // namespace adiaquant
