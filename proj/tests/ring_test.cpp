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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "adiaquant/ring.hpp"
#include "adiaquant/spectrum.hpp"
#include "test_support.hpp"

namespace {

using namespace adiaquant;
using Eigen::MatrixXcd;

// ---------------------------------------------------------------------------
// Fermion operators on the full register, built from explicit Kronecker products

MatrixXcd ckron(const MatrixXcd &a, const MatrixXcd &b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

MatrixXcd fermion(unsigned n, unsigned j, bool dagger) {
    MatrixXcd sx(2, 2), lower(2, 2), raise(2, 2);
    sx << 0, 1, 1, 0;
    lower << 0.5, -0.5, 0.5, -0.5;
    raise << 0.5, 0.5, -0.5, -0.5;
    MatrixXcd out = MatrixXcd::Identity(1, 1);
    for (unsigned k = 1; k <= n; ++k) {
        const MatrixXcd f = k < j ? sx : k == j ? (dagger ? raise : lower) : MatrixXcd::Identity(2, 2);
        out = ckron(out, f);
    }
    return out;
}

MatrixXcd site(unsigned n, unsigned k, const Eigen::MatrixXd &op) { return oracle::site(n, k, op).cast<cplx>(); }

MatrixXcd negation(unsigned n) {
    MatrixXcd g = MatrixXcd::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (unsigned k = 1; k <= n; ++k) {
        g = g * site(n, k, oracle::sigma_x());
    }
    return g;
}

TEST(Fermions, CanonicalAnticommutators) {
    for (unsigned n = 1; n <= 6; ++n) {
        const Eigen::Index dim = Eigen::Index{1} << n;
        for (unsigned j = 1; j <= n; ++j) {
            for (unsigned k = 1; k <= n; ++k) {
                const MatrixXcd bj = fermion(n, j, false), bk = fermion(n, k, false), bkd = fermion(n, k, true);
                EXPECT_LT((bj * bk + bk * bj).norm(), 1e-13);
                const MatrixXcd expect = MatrixXcd::Identity(dim, dim) * (j == k ? 1.0 : 0.0);
                EXPECT_LT((bj * bkd + bkd * bj - expect).norm(), 1e-13);
                EXPECT_LT((fermion(n, j, true) - bj.adjoint()).norm(), 1e-13);
            }
        }
    }
}

TEST(Fermions, NumberOperatorAndBonds) {
    for (unsigned n = 2; n <= 6; ++n) {
        const Eigen::Index dim = Eigen::Index{1} << n;
        const MatrixXcd id = MatrixXcd::Identity(dim, dim);
        for (unsigned j = 1; j <= n; ++j) {
            const MatrixXcd b = fermion(n, j, false), bd = fermion(n, j, true);
            EXPECT_LT((bd * b - 0.5 * (id - site(n, j, oracle::sigma_x()))).norm(), 1e-13);
        }
        for (unsigned j = 1; j < n; ++j) {
            const MatrixXcd lhs = (fermion(n, j, true) - fermion(n, j, false)) *
                                  (fermion(n, j + 1, true) + fermion(n, j + 1, false));
            const MatrixXcd zz = site(n, j, oracle::sigma_z()) * site(n, j + 1, oracle::sigma_z());
            EXPECT_LT((lhs - zz).norm(), 1e-13);
        }
        const MatrixXcd wrap = (fermion(n, n, true) - fermion(n, n, false)) * (fermion(n, 1, true) + fermion(n, 1, false));
        const MatrixXcd zz = site(n, n, oracle::sigma_z()) * site(n, 1, oracle::sigma_z());
        EXPECT_LT((wrap + negation(n) * zz).norm(), 1e-13) << n;
    }
}

TEST(Fermions, QuadraticFormReproducesRingInEvenSector) {
    for (unsigned n = 3; n <= 6; ++n) {
        const Eigen::Index dim = Eigen::Index{1} << n;
        const MatrixXcd even = 0.5 * (MatrixXcd::Identity(dim, dim) + negation(n));
        for (double s : {0.0, 0.3, 0.8}) {
            MatrixXcd h = MatrixXcd::Zero(dim, dim);
            for (unsigned j = 1; j <= n; ++j) {
                const MatrixXcd b = fermion(n, j, false), bd = fermion(n, j, true);
                // b_{n+1} = -b_1
                const double sign = j == n ? -1.0 : 1.0;
                const unsigned next = j == n ? 1 : j + 1;
                const MatrixXcd bond = (bd - b) * (sign * (fermion(n, next, true) + fermion(n, next, false)));
                h += 2.0 * (1.0 - s) * bd * b + 0.5 * s * (MatrixXcd::Identity(dim, dim) - bond);
            }
            const MatrixXcd ring = oracle::hamiltonian(make_ring(n), s).cast<cplx>();
            EXPECT_LT((even * (h - ring) * even).norm(), 1e-12) << n << " " << s;
        }
    }
}

TEST(Fermions, MomentumModesAnticommute) {
    const unsigned n = 6;
    const Eigen::Index dim = Eigen::Index{1} << n;
    std::vector<int> momenta;
    for (int p = -5; p <= 5; p += 2) {
        momenta.push_back(p);
    }
    auto beta = [&](int p) {
        MatrixXcd out = MatrixXcd::Zero(dim, dim);
        for (unsigned j = 1; j <= n; ++j) {
            out += std::polar(1.0 / std::sqrt(n), std::numbers::pi * p * j / n) * fermion(n, j, false);
        }
        return out;
    };
    for (int p : momenta) {
        for (int q : momenta) {
            const MatrixXcd bp = beta(p), bq = beta(q);
            EXPECT_LT((bp * bq + bq * bp).norm(), 1e-12);
            const MatrixXcd expect = MatrixXcd::Identity(dim, dim) * (p == q ? 1.0 : 0.0);
            EXPECT_LT((bp * bq.adjoint() + bq.adjoint() * bp - expect).norm(), 1e-12);
        }
    }
}

// ---------------------------------------------------------------------------
// Closed-form blocks

TEST(BlockEigenvalues, Endpoints) {
    for (unsigned p : {1u, 3u, 7u}) {
        auto [lo0, hi0] = block_eigenvalues(8, p, 0.0);
        EXPECT_NEAR(lo0, 0.0, 1e-15);
        EXPECT_NEAR(hi0, 4.0, 1e-15);
        auto [lo1, hi1] = block_eigenvalues(8, p, 1.0);
        EXPECT_NEAR(lo1, 0.0, 1e-15);
        EXPECT_NEAR(hi1, 2.0, 1e-15);
    }
}

TEST(BlockEigenvalues, MatchExplicitBlock) {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 2 * (2 + static_cast<unsigned>(rng() % 30));
        const unsigned p = 2 * static_cast<unsigned>(rng() % (n / 2)) + 1;
        const double s = unit(rng);
        const Eigen::Matrix2cd a = block_matrix(n, p, s);
        const double c = std::cos(std::numbers::pi * p / n), sn = std::sin(std::numbers::pi * p / n);
        EXPECT_NEAR(std::abs(a(0, 0) - cplx(s + s * c)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(a(0, 1) - cplx(0.0, s * sn)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(a(1, 1) - cplx(4.0 - 3.0 * s - s * c)), 0.0, 1e-15);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(a);
        auto [lo, hi] = block_eigenvalues(n, p, s);
        EXPECT_NEAR(es.eigenvalues()(0), lo, 1e-14);
        EXPECT_NEAR(es.eigenvalues()(1), hi, 1e-14);
    }
}

TEST(BlockEigenvalues, ParityViolations) {
    for (auto [n, p] : std::vector<std::pair<unsigned, unsigned>>{{7, 1}, {8, 2}, {8, 9}, {8, 0}}) {
        try {
            (void)block_eigenvalues(n, p, 0.5);
            FAIL() << n << " " << p;
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
        }
    }
    EXPECT_THROW((void)ring_gap(7), Error);
    EXPECT_THROW((void)ring_levels(5, 0.5), Error);
}

TEST(RingLevels, Endpoints) {
    for (unsigned n : {4u, 10u, 50u}) {
        auto [g0, e0] = ring_levels(n, 0.0);
        EXPECT_NEAR(g0, 0.0, 1e-13);
        EXPECT_NEAR(e0, 4.0, 1e-13);
        auto [g1, e1] = ring_levels(n, 1.0);
        EXPECT_NEAR(g1, 0.0, 1e-13);
        EXPECT_NEAR(e1, 2.0, 1e-13);
    }
}

TEST(RingLevels, MatchSectorDiagonalization) {
    EigenOptions opt;
    for (unsigned n = 4; n <= 12; n += 2) {
        const OperatorPair pair = OperatorPair::from_instance(make_ring(n));
        const SectorOperator op(pair, SectorProjector::global_negation());
        for (double s : {0.1, 0.35, 0.6, 2.0 / 3.0, 0.9}) {
            const auto ep = lowest_eigenpairs(op, s, 2, opt);
            auto [e0, e1] = ring_levels(n, s);
            EXPECT_NEAR(ep.values[0], e0, 1e-9) << n << " " << s;
            EXPECT_NEAR(ep.values[1], e1, 1e-9) << n << " " << s;
        }
    }
}

TEST(RingLevels, GroundStrictlyBelowFirstExcited) {
    for (unsigned n : {4u, 8u, 30u}) {
        for (int i = 0; i <= 100; ++i) {
            auto [e0, e1] = ring_levels(n, i / 100.0);
            EXPECT_LT(e0, e1);
        }
    }
}

TEST(RingGapTest, HundredBits) {
    const RingGap g = ring_gap(100);
    EXPECT_NEAR(g.g_min / (4.0 * std::numbers::pi / 300.0), 1.0, 0.02);
    EXPECT_NEAR(g.s_star, 2.0 / 3.0, 0.02);
}

TEST(RingGapTest, MatchesNumericSectorSearch) {
    const OperatorPair pair = OperatorPair::from_instance(make_ring(8));
    const GapReport numeric = find_min_gap(pair, SectorProjector::global_negation());
    const RingGap exact = ring_gap(8);
    EXPECT_NEAR(numeric.g_min, exact.g_min, 1e-6);
    EXPECT_NEAR(numeric.s_star, exact.s_star, 1e-3);
    EXPECT_NEAR(ring_gap_at(8, exact.s_star), exact.g_min, 1e-15);
}

TEST(RingGapTest, InverseLinearScaling) {
    EXPECT_NEAR(ring_gap(400).g_min / ring_gap(200).g_min, 0.5, 0.025);
}

TEST(RingGapTest, Csv) {
    std::ostringstream os;
    write_ring_csv(os, {ring_gap(4), ring_gap(6)});
    EXPECT_EQ(os.str().substr(0, 15), "n,g_min,s_star\n");
}

TEST(Properties, GaugeEquivalentSpectra) {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (unsigned n = 3; n <= 8; ++n) {
        std::vector<bool> mask(n, false);
        mask[0] = true;
        mask[1 + rng() % (n - 1)] = true;
        const SatInstance ring = make_ring(n, mask);
        const auto g = gauge_transform_ring(ring);
        for (int i = 0; i < 20; ++i) {
            const double s = unit(rng);
            const Eigen::VectorXd a = oracle::eigenvalues(oracle::hamiltonian(ring, s));
            const Eigen::VectorXd b = oracle::eigenvalues(oracle::hamiltonian(g.all_agree, s));
            EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

} // namespace
