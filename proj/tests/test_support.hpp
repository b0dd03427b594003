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

// Independent reference constructions used across the suite. Nothing here
// calls the library's structured apply paths: operators are assembled from
// Kronecker products and per-clause truth tables written out separately.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/instance.hpp"

namespace oracle {

using adiaquant::ClauseKind;
using adiaquant::SatInstance;
namespace clause = adiaquant::clause;

inline Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Single-site operator on bit k (1-based) of n; bit 1 is the leftmost factor.
inline Eigen::MatrixXd site(unsigned n, unsigned k, const Eigen::MatrixXd &op) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
    for (unsigned b = 1; b <= n; ++b) {
        out = kron(out, b == k ? op : Eigen::MatrixXd::Identity(2, 2));
    }
    return out;
}

inline Eigen::MatrixXd sigma_x() {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Eigen::MatrixXd sigma_z() {
    Eigen::MatrixXd m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

/// z_k of the basis state with the given row index, read from a bit string.
inline std::vector<int> bits_of(unsigned n, std::uint64_t z) {
    std::string s;
    for (unsigned k = 0; k < n; ++k) {
        s.insert(s.begin(), static_cast<char>('0' + ((z >> k) & 1)));
    }
    std::vector<int> out(n + 1, 0);  // 1-based
    for (unsigned k = 1; k <= n; ++k) {
        out[k] = s[k - 1] - '0';
    }
    return out;
}

/// Truth-table energy of one clause, written independently of the library.
inline int clause_violated(const ClauseKind &c, const std::vector<int> &z) {
    if (auto *a = std::get_if<clause::Agree>(&c)) {
        return z[a->i] == z[a->j] ? 0 : 1;
    }
    if (auto *d = std::get_if<clause::Disagree>(&c)) {
        return z[d->i] != z[d->j] ? 0 : 1;
    }
    if (auto *im = std::get_if<clause::Imply>(&c)) {
        return (z[im->premise] == 1 && z[im->conclusion] == 0) ? 1 : 0;
    }
    if (auto *o = std::get_if<clause::Or>(&c)) {
        for (int lit : o->literals) {
            const int v = z[static_cast<unsigned>(std::abs(lit))];
            if ((lit > 0 && v == 1) || (lit < 0 && v == 0)) {
                return 0;
            }
        }
        return 1;
    }
    if (auto *ob = std::get_if<clause::OneBit>(&c)) {
        return z[ob->i] == static_cast<int>(ob->value) ? 0 : 1;
    }
    const auto &g = std::get<clause::GroverOracle>(c);
    for (std::size_t k = 0; k < g.target.size(); ++k) {
        if (z[k + 1] != g.target[k]) {
            return 1;
        }
    }
    return 0;
}

inline int energy(const SatInstance &inst, std::uint64_t z) {
    const auto bits = bits_of(inst.n(), z);
    int e = 0;
    for (const auto &c : inst.clauses()) {
        e += clause_violated(c, bits);
    }
    return e;
}

inline Eigen::MatrixXd problem(const SatInstance &inst) {
    const Eigen::Index dim = Eigen::Index{1} << inst.n();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index z = 0; z < dim; ++z) {
        h(z, z) = energy(inst, static_cast<std::uint64_t>(z));
    }
    return h;
}

inline Eigen::MatrixXd driver(unsigned n, const std::vector<double> &d) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
    for (unsigned k = 1; k <= n; ++k) {
        h += d[k - 1] * 0.5 * (id - site(n, k, sigma_x()));
    }
    return h;
}

/// Clause-count degrees, computed from distinct bits per clause.
inline std::vector<double> degrees(const SatInstance &inst) {
    std::vector<double> d(inst.n(), 0.0);
    for (const auto &c : inst.clauses()) {
        std::vector<bool> seen(inst.n() + 1, false);
        std::visit(
            [&](const auto &cl) {
                using T = std::decay_t<decltype(cl)>;
                if constexpr (std::is_same_v<T, clause::Agree> || std::is_same_v<T, clause::Disagree>) {
                    seen[cl.i] = seen[cl.j] = true;
                } else if constexpr (std::is_same_v<T, clause::Imply>) {
                    seen[cl.premise] = seen[cl.conclusion] = true;
                } else if constexpr (std::is_same_v<T, clause::Or>) {
                    for (int l : cl.literals) {
                        seen[static_cast<unsigned>(std::abs(l))] = true;
                    }
                } else if constexpr (std::is_same_v<T, clause::OneBit>) {
                    seen[cl.i] = true;
                } else {
                    for (unsigned k = 1; k <= inst.n(); ++k) {
                        seen[k] = true;
                    }
                }
            },
            c);
        for (unsigned k = 1; k <= inst.n(); ++k) {
            d[k - 1] += seen[k] ? 1.0 : 0.0;
        }
    }
    return d;
}

inline Eigen::MatrixXd hamiltonian(const SatInstance &inst, double s, bool uniform = false) {
    std::vector<double> d = uniform ? std::vector<double>(inst.n(), 1.0) : degrees(inst);
    return (1.0 - s) * driver(inst.n(), d) + s * problem(inst);
}

inline Eigen::VectorXd eigenvalues(const Eigen::MatrixXd &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

/// Random 2-SAT/3-SAT style instance over the pairwise clause vocabulary.
inline SatInstance random_instance(std::mt19937_64 &rng, unsigned n, unsigned m) {
    std::uniform_int_distribution<unsigned> bit(1, n), kind(0, 4), coin(0, 1);
    std::vector<ClauseKind> clauses;
    for (unsigned c = 0; c < m; ++c) {
        unsigned i = bit(rng), j = bit(rng);
        while (j == i) {
            j = bit(rng);
        }
        switch (kind(rng)) {
            case 0: clauses.emplace_back(clause::Agree{i, j}); break;
            case 1: clauses.emplace_back(clause::Disagree{i, j}); break;
            case 2: clauses.emplace_back(clause::Imply{i, j}); break;
            case 3: clauses.emplace_back(clause::OneBit{i, coin(rng)}); break;
            default: {
                unsigned k = bit(rng);
                while (k == i || k == j) {
                    k = bit(rng);
                }
                auto sign = [&](unsigned b) { return coin(rng) ? static_cast<int>(b) : -static_cast<int>(b); };
                clauses.emplace_back(clause::Or{{sign(i), sign(j), sign(k)}});
            }
        }
    }
    return SatInstance(n, std::move(clauses));
}

#ifdef ADIAQUANT_FIXTURE_DIR
/// Parses data/fixtures/<name>.asat.
inline SatInstance fixture(const std::string &name) {
    std::ifstream in(std::string(ADIAQUANT_FIXTURE_DIR) + "/" + name + ".asat");
    std::ostringstream text;
    text << in.rdbuf();
    return adiaquant::parse_instance(text.str());
}
#endif

} // namespace oracle
