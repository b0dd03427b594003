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
 * Level scans, minimum-gap search and the adiabatic time scale.
 *
 * Everything here is generic over InterpolatedOperator, so the same code
 * serves full registers, symmetry sectors and the reduced family matrices.
 */

#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/eigensolver.hpp"
#include "adiaquant/sector.hpp"

namespace adiaquant {

struct SpectrumScan {
    std::vector<double> s_grid;
    std::vector<std::vector<double>> levels;  // levels[i] ascending at s_grid[i]
    std::size_t k = 0;
};

struct GapReport {
    double g_min = 0.0;
    double s_star = 0.0;
    double refinement_tolerance = 0.0;
    std::string sector = "full";
    std::string method;
    std::size_t coarse_points = 0;
    std::size_t evaluations = 0;
    /// Set when E1 - E0 vanishes at an endpoint; that endpoint is then excluded.
    bool degenerate_endpoint = false;
    double gap_at_0 = 0.0;
    double gap_at_1 = 0.0;
    std::string warning;
};

struct GapOptions {
    std::size_t coarse_points = 200;
    double refine_tol = 1e-8;
    /// Endpoint gaps below this count as degenerate.
    double degeneracy_threshold = 1e-9;
    EigenOptions eigen;
};

/// Embeds sector eigenvectors into the full register.
inline EigenPairs lowest_eigenpairs(const OperatorPair &pair, double s, std::size_t k, const SectorProjector &sector,
                                    const EigenOptions &options = {}) {
    if (sector.kind() == SectorProjector::Kind::Full) {
        return lowest_eigenpairs(pair, s, k, options);
    }
    SectorOperator op(pair, sector);
    EigenPairs sec = lowest_eigenpairs(op, s, k, options);
    EigenPairs out = sec;
    out.vectors.resize(static_cast<Eigen::Index>(pair.dimension()), sec.vectors.cols());
    for (Eigen::Index j = 0; j < sec.vectors.cols(); ++j) {
        Eigen::VectorXd c = sec.vectors.col(j);
        Eigen::VectorXd full(out.vectors.rows());
        op.basis().embed<double>(std::span<const double>(c.data(), static_cast<std::size_t>(c.size())),
                                 std::span<double>(full.data(), static_cast<std::size_t>(full.size())));
        out.vectors.col(j) = full;
    }
    return out;
}

/// k lowest levels at grid_points equally spaced s values, endpoints included.
template <InterpolatedOperator Op>
SpectrumScan scan_spectrum(const Op &op, std::size_t k, std::size_t grid_points, const EigenOptions &options = {}) {
    if (grid_points < 2) {
        throw Error(ErrorKind::InvalidArgument, "a spectrum scan needs at least 2 grid points");
    }
    SpectrumScan scan;
    scan.k = k;
    scan.s_grid.resize(grid_points);
    scan.levels.resize(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        scan.s_grid[i] = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    }
    EigenOptions values_only = options;
    values_only.vectors = false;
    parallel_for(grid_points, [&](std::size_t i) {
        scan.levels[i] = lowest_eigenpairs(op, scan.s_grid[i], k, values_only).values;
    });
    return scan;
}

inline SpectrumScan scan_spectrum(const OperatorPair &pair, std::size_t k, std::size_t grid_points,
                                  const SectorProjector &sector, const EigenOptions &options = {}) {
    if (sector.kind() == SectorProjector::Kind::Full) {
        return scan_spectrum(pair, k, grid_points, options);
    }
    return scan_spectrum(SectorOperator(pair, sector), k, grid_points, options);
}

/// CSV with header s,E0,...,Ek-1 and 15 significant digits.
inline void write_scan_csv(std::ostream &os, const SpectrumScan &scan) {
    os << "s";
    for (std::size_t j = 0; j < scan.k; ++j) {
        os << ",E" << j;
    }
    os << '\n';
    char buf[64];
    for (std::size_t i = 0; i < scan.s_grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.15g", scan.s_grid[i]);
        os << buf;
        for (double e : scan.levels[i]) {
            std::snprintf(buf, sizeof buf, "%.15g", e);
            os << ',' << buf;
        }
        os << '\n';
    }
}

/// E1(s) - E0(s).
template <InterpolatedOperator Op>
double spectral_gap(const Op &op, double s, EigenOptions options = {}) {
    options.vectors = false;
    auto v = lowest_eigenpairs(op, s, 2, options).values;
    return v[1] - v[0];
}

/**
 * Minimum of E1 - E0 over [0, 1]: a coarse grid locates the basin, then
 * golden-section search shrinks the bracket around the coarse argmin until
 * it is narrower than min(refine_tol, g / 100).
 */
template <InterpolatedOperator Op>
GapReport find_min_gap(const Op &op, const GapOptions &options = {}, std::string sector = "full") {
    if (options.coarse_points < 16) {
        throw Error(ErrorKind::InvalidArgument, "find_min_gap needs at least 16 coarse points");
    }
    if (!(options.refine_tol > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "refinement tolerance must be positive");
    }
    const std::size_t npts = options.coarse_points;
    std::vector<double> grid(npts), gaps(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(npts - 1);
    }
    parallel_for(npts, [&](std::size_t i) { gaps[i] = spectral_gap(op, grid[i], options.eigen); });

    GapReport report;
    report.sector = std::move(sector);
    report.method = op.dimension() <= options.eigen.dense_limit ? "dense" : "iterative";
    report.coarse_points = npts;
    report.refinement_tolerance = options.refine_tol;
    report.gap_at_0 = gaps.front();
    report.gap_at_1 = gaps.back();
    report.evaluations = npts;

    std::size_t lo = 0, hi = npts - 1;
    if (gaps.back() < options.degeneracy_threshold) {
        report.degenerate_endpoint = true;
        report.warning = "ground level is degenerate at s=1; interior minimum reported, endpoint value separately";
        hi = npts - 2;
    }
    if (gaps.front() < options.degeneracy_threshold) {
        report.degenerate_endpoint = true;
        report.warning = report.warning.empty() ? "ground level is degenerate at s=0; interior minimum reported, "
                                                  "endpoint value separately"
                                                : "ground level is degenerate at both endpoints";
        lo = 1;
    }
    std::size_t best = lo;
    for (std::size_t i = lo; i <= hi; ++i) {
        if (gaps[i] < gaps[best]) {
            best = i;
        }
    }
    double a = grid[best > lo ? best - 1 : best];
    double b = grid[best < hi ? best + 1 : best];
    double g_best = gaps[best];
    double s_best = grid[best];

    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double gc = spectral_gap(op, c, options.eigen);
    double gd = spectral_gap(op, d, options.eigen);
    report.evaluations += 2;
    auto note = [&](double s, double g) {
        if (g < g_best) {
            g_best = g;
            s_best = s;
        }
    };
    note(c, gc);
    note(d, gd);
    for (int iter = 0; iter < 400; ++iter) {
        double target = std::max(std::min(options.refine_tol, 1e-2 * g_best), 1e-15);
        if (b - a < target) {
            break;
        }
        if (gc <= gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - phi * (b - a);
            gc = spectral_gap(op, c, options.eigen);
            note(c, gc);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + phi * (b - a);
            gd = spectral_gap(op, d, options.eigen);
            note(d, gd);
        }
        ++report.evaluations;
    }
    report.g_min = std::max(g_best, 0.0);
    report.s_star = s_best;
    return report;
}

/// Full-register or sector-restricted gap search for an instance's operator pair.
inline GapReport find_min_gap(const OperatorPair &pair, const SectorProjector &sector, std::size_t coarse_points = 200,
                              double refine_tol = 1e-8, const EigenOptions &eigen = {}) {
    GapOptions options;
    options.coarse_points = coarse_points;
    options.refine_tol = refine_tol;
    options.eigen = eigen;
    if (sector.kind() == SectorProjector::Kind::Full) {
        return find_min_gap(pair, options, sector.description());
    }
    return find_min_gap(SectorOperator(pair, sector), options, sector.description());
}

struct AdiabaticEstimate {
    /// E / g_min^2 with E = max over the grid of |<E1|(H_P - H_B)|E0>|.
    double ratio = 0.0;
    double matrix_element = 0.0;
    double s_at_max = 0.0;
    /// ||H_P - H_B||, an a-priori bound on the matrix element.
    double crude_bound = 0.0;
    double g_min = 0.0;
};

namespace detail {

// -(P - B) or (P - B) as an operator, for extreme-eigenvalue queries.
template <class Op>
struct Difference {
    const Op *op;
    double sign;

    [[nodiscard]] std::size_t dimension() const { return op->dimension(); }
    [[nodiscard]] double norm_bound() const { return op->norm_bound(); }
    [[nodiscard]] Eigen::MatrixXd dense(double) const { return sign * (op->dense(1.0) - op->dense(0.0)); }

    template <class T>
    void apply(double, std::span<const T> in, std::span<T> out) const {
        std::vector<T> tmp(in.size());
        op->apply(1.0, in, out);
        op->apply(0.0, in, std::span<T>(tmp));
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = sign * (out[i] - tmp[i]);
        }
    }
};

} // namespace detail

/**
 * Adiabatic time scale E / g_min^2. dH/ds = H_P - H_B, and the matrix
 * element is sampled on grid_points equally spaced s values.
 */
template <InterpolatedOperator Op>
AdiabaticEstimate adiabatic_time_estimate(const Op &op, const GapReport &report, std::size_t grid_points = 200,
                                          const EigenOptions &options = {}) {
    if (!(report.g_min > 0.0)) {
        throw Error(ErrorKind::UndefinedEstimate, "the minimum gap is zero, so no adiabatic time scale exists");
    }
    if (grid_points < 2) {
        throw Error(ErrorKind::InvalidArgument, "need at least 2 grid points");
    }
    std::vector<double> elems(grid_points);
    parallel_for(grid_points, [&](std::size_t i) {
        const double s = static_cast<double>(i) / static_cast<double>(grid_points - 1);
        auto pairs = lowest_eigenpairs(op, s, 2, options);
        Eigen::VectorXd v0 = pairs.vectors.col(0), v1 = pairs.vectors.col(1);
        Eigen::VectorXd hp(v0.size()), hb(v0.size());
        auto in = std::span<const double>(v0.data(), static_cast<std::size_t>(v0.size()));
        op.apply(1.0, in, std::span<double>(hp.data(), static_cast<std::size_t>(hp.size())));
        op.apply(0.0, in, std::span<double>(hb.data(), static_cast<std::size_t>(hb.size())));
        elems[i] = std::abs(v1.dot(hp - hb));
    });
    AdiabaticEstimate est;
    auto it = std::max_element(elems.begin(), elems.end());
    est.matrix_element = *it;
    est.s_at_max = static_cast<double>(it - elems.begin()) / static_cast<double>(grid_points - 1);
    est.g_min = report.g_min;
    est.ratio = est.matrix_element / (report.g_min * report.g_min);
    const double top = -lowest_eigenpairs(detail::Difference<Op>{&op, -1.0}, 0.0, 1, options).values[0];
    const double bottom = lowest_eigenpairs(detail::Difference<Op>{&op, 1.0}, 0.0, 1, options).values[0];
    est.crude_bound = std::max(std::abs(top), std::abs(bottom));
    return est;
}

/// One bit with a z-diagonal driver diag(0, 1): the levels s and 1 - s cross at s = 1/2.
inline MatrixPair crossing_demo() {
    Eigen::MatrixXd b(2, 2), p(2, 2);
    b << 0, 0, 0, 1;
    p << 1, 0, 0, 0;
    return MatrixPair(b, p, "crossing");
}

/// The same pair with an off-diagonal epsilon in the driver; the crossing opens to a gap near epsilon.
inline MatrixPair avoided_crossing_demo(double epsilon) {
    Eigen::MatrixXd b(2, 2), p(2, 2);
    b << 0, epsilon, epsilon, 1;
    p << 1, 0, 0, 0;
    return MatrixPair(b, p, "avoided-crossing");
}

} // namespace adiaquant
