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
 * Permutation-symmetric reductions of the structured families.
 *
 * Symmetric states are labelled by Hamming weight k = 0..n, equivalently
 * m_z = n/2 - k; position k of every reduced vector holds |m_z = n/2 - k>.
 * The bush basis is (z_0, k) with z_0 major: index z_0 * (n + 1) + k.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/hamiltonian.hpp"
#include "adiaquant/ring.hpp"
#include "adiaquant/spectrum.hpp"

namespace adiaquant {

using ReducedOperator = MatrixPair;

/// S_x on the symmetric subspace; entry (k, k+1) = sqrt((k+1)(n-k)) / 2.
inline Eigen::MatrixXd sx_matrix_elements(unsigned n) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
    }
    const auto d = static_cast<Eigen::Index>(n + 1);
    Eigen::MatrixXd sx = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index k = 0; k + 1 < d; ++k) {
        const double v = 0.5 * std::sqrt(static_cast<double>(k + 1) * static_cast<double>(n - k));
        sx(k, k + 1) = v;
        sx(k + 1, k) = v;
    }
    return sx;
}

/// (1-s)[n/2 - S_x] + s[1 - |k=0><k=0|].
inline ReducedOperator grover_reduced(unsigned n) {
    const Eigen::MatrixXd sx = sx_matrix_elements(n);
    const auto d = sx.rows();
    Eigen::MatrixXd b = 0.5 * n * Eigen::MatrixXd::Identity(d, d) - sx;
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(d, d);
    p(0, 0) = 0.0;
    return ReducedOperator(std::move(b), std::move(p), "grover-reduced");
}

/**
 * Bush of implications on n + 1 bits. The hub driver weight is n + 1 in
 * ClauseWeighted mode and 1 in Uniform mode. The problem part is 1 on the
 * z_0 = 0 block (the one-bit clause) and n - k on the z_0 = 1 block (one
 * violated implication per zero spoke).
 */
inline ReducedOperator bush_reduced(unsigned n, InitialMode mode = InitialMode::ClauseWeighted) {
    const Eigen::MatrixXd sx = sx_matrix_elements(n);
    const auto d = sx.rows();
    const double w = mode == InitialMode::ClauseWeighted ? static_cast<double>(n + 1) : 1.0;
    Eigen::MatrixXd spokes = 0.5 * n * Eigen::MatrixXd::Identity(d, d) - sx;
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2 * d, 2 * d);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2 * d, 2 * d);
    for (int z0 = 0; z0 < 2; ++z0) {
        b.block(z0 * d, z0 * d, d, d) = spokes + 0.5 * w * Eigen::MatrixXd::Identity(d, d);
    }
    b.block(0, d, d, d) = -0.5 * w * Eigen::MatrixXd::Identity(d, d);
    b.block(d, 0, d, d) = -0.5 * w * Eigen::MatrixXd::Identity(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        p(k, k) = 1.0;
        p(d + k, d + k) = static_cast<double>(n) - static_cast<double>(k);
    }
    return ReducedOperator(std::move(b), std::move(p),
                           mode == InitialMode::ClauseWeighted ? "bush-reduced" : "bush-uniform-reduced");
}

/// Columns (|k> + |n-k>)/sqrt 2 for k < n/2, plus |n/2> for even n.
inline Eigen::MatrixXd reflection_symmetric_basis(unsigned n) {
    const auto d = static_cast<Eigen::Index>(n + 1);
    const auto half = static_cast<Eigen::Index>(n / 2 + 1);
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(d, half);
    for (Eigen::Index k = 0; k < half; ++k) {
        if (2 * k == static_cast<Eigen::Index>(n)) {
            q(k, k) = 1.0;
        } else {
            q(k, k) = std::sqrt(0.5);
            q(d - 1 - k, k) = std::sqrt(0.5);
        }
    }
    return q;
}

/**
 * Overconstrained 2-SAT (all agree pairs): (1-s)(n-1)[n/2 - S_x] +
 * s[n^2/4 - S_z^2], restricted to states even under m_z -> -m_z, which is
 * the G = +1 sector of the symmetric subspace.
 */
inline ReducedOperator overconstrained_reduced(unsigned n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "overconstrained family needs n >= 2");
    }
    const Eigen::MatrixXd sx = sx_matrix_elements(n);
    const auto d = sx.rows();
    Eigen::MatrixXd b = (n - 1.0) * (0.5 * n * Eigen::MatrixXd::Identity(d, d) - sx);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const double m = 0.5 * n - static_cast<double>(k);
        p(k, k) = 0.25 * n * n - m * m;
    }
    const Eigen::MatrixXd q = reflection_symmetric_basis(n);
    Eigen::MatrixXd bq = q.transpose() * b * q;
    Eigen::MatrixXd pq = q.transpose() * p * q;
    bq = 0.5 * (bq + bq.transpose()).eval();
    pq = 0.5 * (pq + pq.transpose()).eval();
    return ReducedOperator(std::move(bq), std::move(pq), "overconstrained-reduced");
}

/// P_r = C(n, r) / 2^n.
inline std::vector<double> grover_weights(unsigned n) {
    std::vector<double> w(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
        w[r] = std::exp(std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0) - n * std::log(2.0));
    }
    return w;
}

struct SecularSolution {
    unsigned n = 0;
    double s_star = 0.0;
    double lambda_minus = 0.0;  // root in (-inf, 0)
    double lambda_plus = 0.0;   // root in (0, 1)
    double gap_exact = 0.0;     // (1 - s*)(lambda_plus - lambda_minus)
    double gap_estimate = 0.0;  // 2 (1 - s*) (sum P_r / r^2)^(-1/2) 2^(-n/2)
    double sum_p_over_r = 0.0;
    double sum_p_over_r2 = 0.0;
};

/**
 * All n + 1 roots of sum_r P_r / (r - lambda) = (1 - s)/s, one per interval
 * (-inf, 0), (0, 1), ..., (n-1, n). The left side increases on every
 * interval, so each root is found by bisection to the last representable bit.
 */
inline std::vector<double> secular_roots(unsigned n, double s) {
    if (!(s > 0.0 && s < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "secular equation needs s in (0, 1)");
    }
    const auto w = grover_weights(n);
    const double target = (1.0 - s) / s;
    auto f = [&](double lambda) {
        double acc = 0.0;
        for (unsigned r = 0; r <= n; ++r) {
            acc += w[r] / (r - lambda);
        }
        return acc;
    };
    auto bisect = [&](double lo, double hi) {
        for (int it = 0; it < 2000; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            (f(mid) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    std::vector<double> roots;
    roots.reserve(n + 1);
    // for lambda < 0 every term is below P_r / (-lambda), so the root exceeds -1/target
    roots.push_back(bisect(-1.0 / target - 1.0, 0.0));
    for (unsigned r = 0; r < n; ++r) {
        roots.push_back(bisect(static_cast<double>(r), static_cast<double>(r + 1)));
    }
    return roots;
}

inline SecularSolution grover_secular(unsigned n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "grover_secular needs n >= 2");
    }
    const auto w = grover_weights(n);
    SecularSolution sol;
    sol.n = n;
    for (unsigned r = 1; r <= n; ++r) {
        sol.sum_p_over_r += w[r] / r;
        sol.sum_p_over_r2 += w[r] / (static_cast<double>(r) * r);
    }
    sol.s_star = 1.0 / (1.0 + sol.sum_p_over_r);
    const auto roots = secular_roots(n, sol.s_star);
    sol.lambda_minus = roots[0];
    sol.lambda_plus = roots[1];
    sol.gap_exact = (1.0 - sol.s_star) * (sol.lambda_plus - sol.lambda_minus);
    sol.gap_estimate = 2.0 * (1.0 - sol.s_star) / std::sqrt(sol.sum_p_over_r2) * std::pow(2.0, -0.5 * n);
    return sol;
}

enum class Family { Grover, Bush, BushUniform, Overconstrained, Ring };

inline const char *family_name(Family f) {
    switch (f) {
        case Family::Grover: return "grover";
        case Family::Bush: return "bush";
        case Family::BushUniform: return "bush-uniform";
        case Family::Overconstrained: return "overconstrained";
        case Family::Ring: return "ring";
    }
    return "unknown";
}

inline Family parse_family(const std::string &name) {
    for (Family f : {Family::Grover, Family::Bush, Family::BushUniform, Family::Overconstrained, Family::Ring}) {
        if (name == family_name(f)) {
            return f;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + name + "'");
}

/// The reduced operator of a family (Ring has none; it is analytic).
inline ReducedOperator family_reduced(Family f, unsigned n) {
    switch (f) {
        case Family::Grover: return grover_reduced(n);
        case Family::Bush: return bush_reduced(n, InitialMode::ClauseWeighted);
        case Family::BushUniform: return bush_reduced(n, InitialMode::Uniform);
        case Family::Overconstrained: return overconstrained_reduced(n);
        case Family::Ring: break;
    }
    throw Error(ErrorKind::Unsupported, "the ring family is solved analytically, not by reduction");
}

/// Minimum gap of a family member through its reduced or analytic path.
inline GapReport family_gap(Family f, unsigned n, const GapOptions &options = {}) {
    if (f == Family::Ring) {
        auto r = ring_gap(n, std::min(options.refine_tol, 1e-12));
        GapReport report;
        report.g_min = r.g_min;
        report.s_star = r.s_star;
        report.refinement_tolerance = std::min(options.refine_tol, 1e-12);
        report.sector = "global-negation";
        report.method = "analytic";
        return report;
    }
    const ReducedOperator op = family_reduced(f, n);
    GapReport report = find_min_gap(op, options, f == Family::Overconstrained ? "symmetric+global-negation" : "symmetric");
    report.method = "reduced";
    return report;
}

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    /// Root-mean-square residual in log g.
    double residual = 0.0;
};

inline LinearFit least_squares(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "a line fit needs at least two points");
    }
    Eigen::MatrixXd a(static_cast<Eigen::Index>(x.size()), 2);
    Eigen::VectorXd b(static_cast<Eigen::Index>(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        a(static_cast<Eigen::Index>(i), 0) = x[i];
        a(static_cast<Eigen::Index>(i), 1) = 1.0;
        b(static_cast<Eigen::Index>(i)) = y[i];
    }
    Eigen::Vector2d coef = a.colPivHouseholderQr().solve(b);
    LinearFit fit{coef(0), coef(1), 0.0};
    fit.residual = std::sqrt((a * coef - b).squaredNorm() / static_cast<double>(x.size()));
    return fit;
}

struct ScalingRow {
    unsigned n = 0;
    double g_min = 0.0;
    double s_star = 0.0;
};

struct ScalingStudy {
    Family family = Family::Grover;
    std::vector<ScalingRow> rows;
    /// log g = slope * log n + intercept.
    LinearFit power_law;
    /// log g = slope * n + intercept.
    LinearFit exponential;

    [[nodiscard]] bool exponential_preferred() const { return exponential.residual < power_law.residual; }
};

inline ScalingStudy gap_scaling_study(Family f, const std::vector<unsigned> &n_values, const GapOptions &options = {}) {
    if (n_values.size() < 3) {
        throw Error(ErrorKind::InvalidArgument, "a scaling study needs at least 3 values of n");
    }
    if (!std::is_sorted(n_values.begin(), n_values.end())) {
        throw Error(ErrorKind::InvalidArgument, "n values must be ascending");
    }
    ScalingStudy study;
    study.family = f;
    study.rows.resize(n_values.size());
    parallel_for(n_values.size(), [&](std::size_t i) {
        auto r = family_gap(f, n_values[i], options);
        study.rows[i] = ScalingRow{n_values[i], r.g_min, r.s_star};
    });
    std::vector<double> ln_n, n_lin, ln_g;
    for (const auto &row : study.rows) {
        ln_n.push_back(std::log(static_cast<double>(row.n)));
        n_lin.push_back(static_cast<double>(row.n));
        ln_g.push_back(std::log(row.g_min));
    }
    study.power_law = least_squares(ln_n, ln_g);
    study.exponential = least_squares(n_lin, ln_g);
    return study;
}

/// CSV n,g_min,log_n,log_g (natural logarithms).
inline void write_scaling_csv(std::ostream &os, const ScalingStudy &study) {
    os << "n,g_min,log_n,log_g\n";
    char buf[128];
    for (const auto &r : study.rows) {
        std::snprintf(buf, sizeof buf, "%u,%.15g,%.15g,%.15g\n", r.n, r.g_min, std::log(static_cast<double>(r.n)),
                      std::log(r.g_min));
        os << buf;
    }
}

} // namespace adiaquant
