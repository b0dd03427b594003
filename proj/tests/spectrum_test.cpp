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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "adiaquant/spectrum.hpp"
#include "test_support.hpp"

namespace {

using namespace adiaquant;

const SatInstance kOneQubit(1, {clause::OneBit{1, 1}});

TEST(LowestEigenpairs, OneQubitClosedForm) {
    const OperatorPair pair = OperatorPair::from_instance(kOneQubit);
    for (double s : {0.0, 0.13, 0.5, 0.77, 1.0}) {
        const auto ep = lowest_eigenpairs(pair, s, 2);
        const double root = std::sqrt(1.0 - 2.0 * s + 2.0 * s * s);
        EXPECT_NEAR(ep.values[0], 0.5 * (1.0 - root), 1e-14);
        EXPECT_NEAR(ep.values[1], 0.5 * (1.0 + root), 1e-14);
    }
}

TEST(LowestEigenpairs, DriverGroundStateIsUniform) {
    std::mt19937_64 rng(41);
    EigenOptions iterative;
    iterative.dense_limit = 16;
    for (unsigned n : {3u, 6u, 8u}) {
        const OperatorPair pair = OperatorPair::from_instance(oracle::random_instance(rng, n, n + 1));
        for (const auto &opt : {EigenOptions{}, iterative}) {
            const auto ep = lowest_eigenpairs(pair, 0.0, 1, opt);
            EXPECT_NEAR(ep.values[0], 0.0, 1e-12);
            const double u = std::pow(2.0, -0.5 * n);
            for (Eigen::Index z = 0; z < ep.vectors.rows(); ++z) {
                EXPECT_NEAR(ep.vectors(z, 0), u, 1e-8);
            }
        }
    }
}

TEST(LowestEigenpairs, ContractOnResidualsAndOrthonormality) {
    std::mt19937_64 rng(43);
    EigenOptions iterative;
    iterative.dense_limit = 32;
    for (unsigned n : {5u, 7u, 9u}) {
        const SatInstance inst = oracle::random_instance(rng, n, 2 * n);
        const OperatorPair pair = OperatorPair::from_instance(inst);
        const Eigen::MatrixXd h = oracle::hamiltonian(inst, 0.4);
        const Eigen::VectorXd exact = oracle::eigenvalues(h);
        for (const auto &opt : {EigenOptions{}, iterative}) {
            const auto ep = lowest_eigenpairs(pair, 0.4, 4, opt);
            ASSERT_EQ(ep.values.size(), 4u);
            for (std::size_t j = 0; j < 4; ++j) {
                const auto jj = static_cast<Eigen::Index>(j);
                EXPECT_NEAR(ep.values[j], exact(jj), 1e-9) << ep.method;
                const double res = (h * ep.vectors.col(jj) - ep.values[j] * ep.vectors.col(jj)).norm();
                EXPECT_LE(res, 1e-9 * std::max(1.0, std::abs(ep.values[j])));
                if (j > 0) {
                    EXPECT_LE(ep.values[j - 1], ep.values[j]);
                }
            }
            const Eigen::MatrixXd gram = ep.vectors.transpose() * ep.vectors;
            EXPECT_LT((gram - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-9);
        }
    }
}

TEST(LowestEigenpairs, IterativeSolverOnLargerRegister) {
    // 2^12 states, well past the dense limit
    const OperatorPair pair = OperatorPair::from_instance(make_ring(12));
    const auto ep = lowest_eigenpairs(pair, 0.5, 3);
    EXPECT_EQ(ep.method, "iterative");
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_LE(ep.residuals[j], 1e-9 * std::max(1.0, std::abs(ep.values[j])));
    }
    // the ground state is negation-even, so the sector solve must find the same level
    const auto sec = lowest_eigenpairs(pair, 0.5, 1, SectorProjector::global_negation());
    EXPECT_NEAR(sec.values[0], ep.values[0], 1e-9);
}

TEST(LowestEigenpairs, ErrorsAndNonConvergence) {
    const OperatorPair pair = OperatorPair::from_instance(make_ring(6));
    EXPECT_THROW((void)lowest_eigenpairs(pair, 0.5, 0), Error);
    EXPECT_THROW((void)lowest_eigenpairs(pair, 0.5, 65), Error);
    EigenOptions starved;
    starved.dense_limit = 8;
    starved.max_matvecs = 10;
    try {
        (void)lowest_eigenpairs(pair, 0.5, 2, starved);
        FAIL() << "expected a numerical failure";
    } catch (const NumericalFailure &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NumericalFailure);
        ASSERT_EQ(e.residuals().size(), 2u);
        EXPECT_GT(e.residuals()[0] + e.residuals()[1], 0.0);
    }
}

TEST(LowestEigenpairs, AvoidedCrossingDistance) {
    const MatrixPair op = avoided_crossing_demo(0.01);
    double best = 1.0;
    for (int i = 0; i <= 2000; ++i) {
        const auto v = lowest_eigenpairs(op, i / 2000.0, 2).values;
        best = std::min(best, v[1] - v[0]);
    }
    EXPECT_NEAR(best, 0.01, 1e-4);
}

TEST(Sector, VectorsLieInNegationSector) {
    const OperatorPair pair = OperatorPair::from_instance(make_ring(8));
    const auto ep = lowest_eigenpairs(pair, 0.6, 3, SectorProjector::global_negation());
    const Eigen::Index dim = ep.vectors.rows();
    for (Eigen::Index j = 0; j < 3; ++j) {
        for (Eigen::Index z = 0; z < dim; ++z) {
            EXPECT_NEAR(ep.vectors(z, j), ep.vectors(dim - 1 - z, j), 1e-9);
        }
        const Eigen::VectorXd v = ep.vectors.col(j);
        EXPECT_LE((oracle::hamiltonian(make_ring(8), 0.6) * v - ep.values[static_cast<std::size_t>(j)] * v).norm(),
                  1e-9);
    }
}

TEST(Sector, EmbedProjectIsometry) {
    const unsigned n = 6;
    for (const auto &sector : {SectorProjector::global_negation(), SectorProjector::symmetric({2, 3, 4, 5, 6}, n),
                               SectorProjector::symmetric({1, 2, 3, 4, 5, 6}, n, true)}) {
        const SectorBasis basis = SectorBasis::build(n, sector);
        std::mt19937_64 rng(47);
        std::normal_distribution<double> g;
        Eigen::VectorXd c(static_cast<Eigen::Index>(basis.dimension()));
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            c(i) = g(rng);
        }
        Eigen::VectorXd full(64), back(c.size());
        basis.embed<double>(std::span<const double>(c.data(), static_cast<std::size_t>(c.size())),
                            std::span<double>(full.data(), 64));
        basis.project<double>(std::span<const double>(full.data(), 64),
                              std::span<double>(back.data(), static_cast<std::size_t>(back.size())));
        EXPECT_NEAR(full.norm(), c.norm(), 1e-12);
        EXPECT_LT((back - c).norm(), 1e-12);
    }
    EXPECT_EQ(SectorBasis::build(6, SectorProjector::global_negation()).dimension(), 32u);
    EXPECT_EQ(SectorBasis::build(6, SectorProjector::symmetric({1, 2, 3, 4, 5, 6}, 6)).dimension(), 7u);
    EXPECT_EQ(SectorBasis::build(6, SectorProjector::symmetric({1, 2, 3, 4, 5, 6}, 6, true)).dimension(), 4u);
}

TEST(Sector, NonCommutingSectorRejected) {
    const OperatorPair pair = OperatorPair::from_instance(make_three_bit_example());
    EXPECT_FALSE(sector_commutes(pair, SectorProjector::global_negation()));
    try {
        SectorOperator op(pair, SectorProjector::global_negation());
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
    const OperatorPair ring = OperatorPair::from_instance(make_ring(5));
    EXPECT_TRUE(sector_commutes(ring, SectorProjector::global_negation()));
}

TEST(Properties, SectorEigenvaluesSubsetOfFull) {
    struct Case {
        SatInstance inst;
        SectorProjector sector;
    };
    const std::vector<Case> cases = {
        {make_ring(8, {true, true, false, false, false, false, false, false}), SectorProjector::global_negation()},
        {make_overconstrained(7), SectorProjector::symmetric({1, 2, 3, 4, 5, 6, 7}, 7, true)},
        {make_bush(6), SectorProjector::symmetric({2, 3, 4, 5, 6, 7}, 7)},
        {make_grover(9), SectorProjector::symmetric({1, 2, 3, 4, 5, 6, 7, 8, 9}, 9)},
        {make_ring(10), SectorProjector::global_negation()},
    };
    for (const auto &c : cases) {
        const OperatorPair pair = OperatorPair::from_instance(c.inst);
        for (double s : {0.25, 0.65}) {
            const Eigen::VectorXd full = oracle::eigenvalues(oracle::hamiltonian(c.inst, s));
            const SectorOperator op(pair, c.sector);
            const Eigen::VectorXd sec = oracle::eigenvalues(op.dense(s));
            for (Eigen::Index j = 0; j < std::min<Eigen::Index>(sec.size(), 6); ++j) {
                const double nearest = (full.array() - sec(j)).abs().minCoeff();
                EXPECT_LT(nearest, 1e-9) << c.sector.description() << " s=" << s << " level " << j;
            }
        }
    }
}

TEST(Properties, RingNegationSectorGapStaysOpen) {
    for (unsigned n = 4; n <= 14; n += 2) {
        const OperatorPair pair = OperatorPair::from_instance(make_ring(n));
        const SectorOperator op(pair, SectorProjector::global_negation());
        const int points = n >= 12 ? 11 : 41;
        for (int i = 0; i < points; ++i) {
            const double s = static_cast<double>(i) / (points - 1);
            EXPECT_GT(spectral_gap(op, s), 1e-3) << "n=" << n << " s=" << s;
        }
    }
}

TEST(ScanSpectrum, CrossingDemoLevels) {
    const auto scan = scan_spectrum(crossing_demo(), 2, 101);
    for (std::size_t i = 0; i < scan.s_grid.size(); ++i) {
        const double s = scan.s_grid[i];
        EXPECT_NEAR(scan.levels[i][0], std::min(s, 1.0 - s), 1e-15);
        EXPECT_NEAR(scan.levels[i][1], std::max(s, 1.0 - s), 1e-15);
    }
    const GapReport r = find_min_gap(crossing_demo());
    EXPECT_NEAR(r.g_min, 0.0, 1e-9);
    EXPECT_NEAR(r.s_star, 0.5, 1e-9);
}

TEST(ScanSpectrum, AgreeAndDisagreeIdentical) {
    const auto a = scan_spectrum(OperatorPair::from_instance(SatInstance(2, {clause::Agree{1, 2}})), 4, 50);
    const auto d = scan_spectrum(OperatorPair::from_instance(SatInstance(2, {clause::Disagree{1, 2}})), 4, 50);
    for (std::size_t i = 0; i < 50; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_NEAR(a.levels[i][j], d.levels[i][j], 1e-13);
        }
    }
}

TEST(ScanSpectrum, ThreeBitEndpointLevels) {
    const SatInstance inst = make_three_bit_example();
    const auto scan = scan_spectrum(OperatorPair::from_instance(inst), 8, 11);
    std::vector<double> energies;
    for (std::uint64_t z = 0; z < 8; ++z) {
        energies.push_back(oracle::energy(inst, z));
    }
    std::sort(energies.begin(), energies.end());
    EXPECT_EQ(energies, (std::vector<double>{0, 1, 1, 1, 1, 1, 2, 3}));
    for (std::size_t j = 0; j < 8; ++j) {
        EXPECT_NEAR(scan.levels.back()[j], energies[j], 1e-12);
    }
    EXPECT_EQ(scan.s_grid.front(), 0.0);
    EXPECT_EQ(scan.s_grid.back(), 1.0);
}

TEST(ScanSpectrum, LipschitzContinuity) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        const SatInstance inst = oracle::random_instance(rng, 5, 6);
        const OperatorPair pair = OperatorPair::from_instance(inst);
        const auto scan = scan_spectrum(pair, 6, 60);
        const Eigen::MatrixXd diff = oracle::problem(inst) - oracle::driver(5, oracle::degrees(inst));
        const double lip = oracle::eigenvalues(diff).cwiseAbs().maxCoeff();
        const double ds = scan.s_grid[1] - scan.s_grid[0];
        for (std::size_t i = 1; i < scan.s_grid.size(); ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                EXPECT_LE(std::abs(scan.levels[i][j] - scan.levels[i - 1][j]), lip * ds + 1e-10);
            }
        }
    }
}

TEST(ScanSpectrum, CsvRoundTrip) {
    const auto scan = scan_spectrum(OperatorPair::from_instance(make_three_bit_example()), 3, 7);
    std::ostringstream os;
    write_scan_csv(os, scan);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "s,E0,E1,E2");
    for (std::size_t i = 0; i < 7; ++i) {
        ASSERT_TRUE(std::getline(is, line));
        std::stringstream row(line);
        std::string cell;
        std::vector<double> values;
        while (std::getline(row, cell, ',')) {
            values.push_back(std::stod(cell));
        }
        ASSERT_EQ(values.size(), 4u);
        EXPECT_NEAR(values[0], scan.s_grid[i], 1e-15);
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_NEAR(values[j + 1], scan.levels[i][j], 1e-14 * std::max(1.0, std::abs(scan.levels[i][j])));
        }
    }
    EXPECT_THROW((void)scan_spectrum(crossing_demo(), 2, 1), Error);
}

TEST(FindMinGap, RingEightNegationSector) {
    const OperatorPair pair = OperatorPair::from_instance(make_ring(8));
    const GapReport r = find_min_gap(pair, SectorProjector::global_negation());
    EXPECT_NEAR(r.g_min / (4.0 * std::numbers::pi / 24.0), 1.0, 0.15);
    EXPECT_EQ(r.sector, "global-negation");
    EXPECT_FALSE(r.degenerate_endpoint);
}

TEST(FindMinGap, GroverTenFullSpace) {
    // exact value from an independent dense computation; the asymptotic 2 * 2^-5 is 36% lower
    const OperatorPair pair = OperatorPair::from_instance(make_grover(10));
    const GapReport r = find_min_gap(pair, SectorProjector::full());
    EXPECT_NEAR(r.g_min, 0.0455224, 5e-7);
    EXPECT_EQ(r.method, "iterative");
}

TEST(FindMinGap, AvoidedCrossingEpsilon) {
    const GapReport r = find_min_gap(avoided_crossing_demo(1e-3));
    EXPECT_NEAR(r.g_min, 1e-3, 1e-9);
    EXPECT_NEAR(r.s_star, 0.5, 1e-3);
    EXPECT_LT(r.refinement_tolerance, 1e-7);
}

TEST(FindMinGap, DegenerateEndpointFlagged) {
    const OperatorPair pair = OperatorPair::from_instance(make_ring(6));
    const GapReport full = find_min_gap(pair, SectorProjector::full(), 32);
    EXPECT_TRUE(full.degenerate_endpoint);
    EXPECT_FALSE(full.warning.empty());
    EXPECT_LT(full.gap_at_1, 1e-9);
    const GapReport sector = find_min_gap(pair, SectorProjector::global_negation(), 32);
    EXPECT_FALSE(sector.degenerate_endpoint);
    EXPECT_GT(sector.g_min, 0.1);
}

TEST(FindMinGap, PreconditionsChecked) {
    GapOptions few;
    few.coarse_points = 8;
    EXPECT_THROW((void)find_min_gap(crossing_demo(), few), Error);
}

TEST(Properties, GridRefinementInvariance) {
    const std::vector<std::pair<SatInstance, SectorProjector>> fixtures = {
        {make_three_bit_example(), SectorProjector::full()},
        {SatInstance(1, {clause::OneBit{1, 1}}), SectorProjector::full()},
        {SatInstance(2, {clause::Imply{1, 2}, clause::OneBit{1, 1}}), SectorProjector::full()},
        {make_ring(4), SectorProjector::global_negation()},
        {make_bush(3), SectorProjector::full()},
    };
    for (const auto &[inst, sector] : fixtures) {
        const OperatorPair pair = OperatorPair::from_instance(inst);
        const GapReport a = find_min_gap(pair, sector, 100);
        const GapReport b = find_min_gap(pair, sector, 200);
        EXPECT_LT(std::abs(a.g_min - b.g_min), 1e-6) << serialize_instance(inst);
    }
}

TEST(Properties, GroundEnergyZeroExactlyWhenSatisfiable) {
    std::mt19937_64 rng(59);
    int sat = 0, unsat = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const SatInstance inst = oracle::random_instance(rng, 5, 4 + static_cast<unsigned>(trial % 8));
        const double e0 = lowest_eigenpairs(OperatorPair::from_instance(inst), 1.0, 1).values[0];
        const bool satisfiable = brute_force_solve(inst).min_energy == 0;
        (satisfiable ? sat : unsat)++;
        EXPECT_EQ(std::abs(e0) < 1e-12, satisfiable);
    }
    EXPECT_GT(sat, 0);
    EXPECT_GT(unsat, 0);
}

TEST(AdiabaticEstimate, OneQubitAgainstClosedForm) {
    const OperatorPair pair = OperatorPair::from_instance(kOneQubit);
    const GapReport r = find_min_gap(pair);
    const AdiabaticEstimate est = adiabatic_time_estimate(pair, r);
    // closed form: g(s) = sqrt(1 - 2s + 2s^2), smallest at s = 1/2
    EXPECT_NEAR(r.g_min, std::sqrt(0.5), 1e-12);
    double worst = 0.0;
    Eigen::Matrix2d dh;
    dh << 0.5, 0.5, 0.5, -0.5;  // diag(1, 0) - (1 - sigma_x) / 2
    for (int i = 0; i < 200; ++i) {
        const double s = i / 199.0;
        Eigen::Matrix2d h;
        h << 0.5 * (1 - s) + s, -0.5 * (1 - s), -0.5 * (1 - s), 0.5 * (1 - s);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
        worst = std::max(worst, std::abs(es.eigenvectors().col(1).dot(dh * es.eigenvectors().col(0))));
    }
    EXPECT_NEAR(est.matrix_element, worst, 1e-12);
    EXPECT_NEAR(est.ratio, worst / 0.5, 1e-10);
    EXPECT_GT(est.ratio, 0.1);
    EXPECT_LT(est.ratio, 10.0);
    EXPECT_LE(est.matrix_element, est.crude_bound + 1e-12);
}

TEST(AdiabaticEstimate, BoundedByClausesPlusDegrees) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 8; ++trial) {
        const SatInstance inst = oracle::random_instance(rng, 5, 5);
        const OperatorPair pair = OperatorPair::from_instance(inst);
        const GapReport r = find_min_gap(pair, SectorProjector::full(), 32, 1e-4);
        if (!(r.g_min > 1e-6)) {
            continue;
        }
        const AdiabaticEstimate est = adiabatic_time_estimate(pair, r, 50);
        EXPECT_LE(est.matrix_element, static_cast<double>(inst.m()) + pair.hb().total_weight());
        EXPECT_LE(est.matrix_element, est.crude_bound + 1e-9);
    }
}

TEST(AdiabaticEstimate, ScalesInverselyWithOperator) {
    const OperatorPair pair = OperatorPair::from_instance(make_three_bit_example());
    const MatrixPair base(pair.dense(0.0), pair.dense(1.0));
    const MatrixPair scaled(3.0 * pair.dense(0.0), 3.0 * pair.dense(1.0));
    const double a = adiabatic_time_estimate(base, find_min_gap(base)).ratio;
    const double b = adiabatic_time_estimate(scaled, find_min_gap(scaled)).ratio;
    EXPECT_NEAR(b * 3.0 / a, 1.0, 1e-8);
}

TEST(AdiabaticEstimate, ZeroGapUndefined) {
    GapReport zero;
    try {
        (void)adiabatic_time_estimate(crossing_demo(), zero);
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UndefinedEstimate);
    }
}

} // namespace
