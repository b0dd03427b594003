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
 * Lowest eigenpairs of a real symmetric operator.
 *
 * Small problems are handed to a dense symmetric solver. Larger ones use a
 * block Krylov iteration on the matrix-free action: each cycle adds the
 * residuals of the wanted Ritz pairs and a few block-Lanczos steps beyond
 * them, all kept orthonormal by two passes of classical Gram-Schmidt. The
 * space is thick-restarted onto the best Ritz vectors when it fills up.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/hamiltonian.hpp"

namespace adiaquant {

struct EigenOptions {
    /// Dimensions up to this size are diagonalized densely.
    std::size_t dense_limit = 512;
    /// Converged when ||Hv - Ev|| <= tolerance * max(1, |E|).
    double tolerance = 1e-9;
    /// Search-space cap; lowered automatically for very large dimensions.
    std::size_t max_basis = 48;
    std::size_t max_matvecs = 200000;
    std::uint64_t seed = 0x5eed;
    /// Block Krylov steps taken between Rayleigh-Ritz extractions.
    int lanczos_blocks = 4;
    /// When false only eigenvalues are returned (dense path skips eigenvectors).
    bool vectors = true;
};

struct EigenPairs {
    std::vector<double> values;
    Eigen::MatrixXd vectors;  // one column per eigenvalue
    std::vector<double> residuals;
    std::string method;
};

namespace detail {

template <class Op>
Eigen::VectorXd apply_real(const Op &op, double s, const Eigen::VectorXd &x) {
    Eigen::VectorXd y(x.size());
    op.apply(s, std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
             std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
    return y;
}

inline void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    Eigen::Index lead = 0;
    v.cwiseAbs().maxCoeff(&lead);
    if (v(lead) < 0) {
        v = -v;
    }
}

// Orthogonalizes x against the first `cols` columns of V (twice); returns the remaining norm.
inline double orthogonalize(const Eigen::MatrixXd &V, Eigen::Index cols, Eigen::VectorXd &x) {
    for (int pass = 0; pass < 2; ++pass) {
        if (cols > 0) {
            Eigen::VectorXd c = V.leftCols(cols).transpose() * x;
            x.noalias() -= V.leftCols(cols) * c;
        }
    }
    return x.norm();
}

template <class Op>
EigenPairs dense_eigenpairs(const Op &op, double s, std::size_t k, bool vectors) {
    const Eigen::MatrixXd h = op.dense(s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalFailure("dense symmetric eigensolver failed", {});
    }
    EigenPairs out;
    out.method = "dense";
    const auto kk = static_cast<Eigen::Index>(k);
    if (!vectors) {
        for (Eigen::Index j = 0; j < kk; ++j) {
            out.values.push_back(es.eigenvalues()(j));
        }
        return out;
    }
    out.vectors = es.eigenvectors().leftCols(kk);
    for (Eigen::Index j = 0; j < kk; ++j) {
        fix_sign(out.vectors.col(j));
        out.values.push_back(es.eigenvalues()(j));
        out.residuals.push_back((h * out.vectors.col(j) - es.eigenvalues()(j) * out.vectors.col(j)).norm());
    }
    return out;
}

template <class Op>
EigenPairs iterative_eigenpairs(const Op &op, double s, std::size_t k, const EigenOptions &opt) {
    const auto dim = static_cast<Eigen::Index>(op.dimension());
    const auto kk = static_cast<Eigen::Index>(k);
    const Eigen::Index block = std::min<Eigen::Index>(kk + 2, dim);
    const std::size_t memory_cap = (std::size_t{1} << 27) / static_cast<std::size_t>(dim);
    const Eigen::Index cap = std::min<Eigen::Index>(
        dim, static_cast<Eigen::Index>(std::max<std::size_t>(std::min(opt.max_basis, memory_cap), 2 * block + 2)));
    const Eigen::Index keep = std::max<Eigen::Index>(block, cap / 2);

    // V: orthonormal search basis, W = H V, T = V^T H V (kept incrementally)
    Eigen::MatrixXd V(dim, cap), W(dim, cap), T = Eigen::MatrixXd::Zero(cap, cap);
    Eigen::Index m = 0;
    std::size_t matvecs = 0;

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    auto push = [&](Eigen::VectorXd x) {
        const double before = x.norm();
        const double after = orthogonalize(V, m, x);
        if (after <= 1e-10 * std::max(before, 1e-300)) {
            return false;
        }
        V.col(m) = x / after;
        W.col(m) = apply_real(op, s, V.col(m));
        ++matvecs;
        Eigen::VectorXd col = V.leftCols(m + 1).transpose() * W.col(m);
        T.col(m).head(m + 1) = col;
        T.row(m).head(m + 1) = col.transpose();
        ++m;
        return true;
    };
    auto random_vector = [&] {
        Eigen::VectorXd x(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            x(i) = gauss(rng);
        }
        return x;
    };
    while (m < block) {
        push(random_vector());
    }

    std::vector<double> last_residuals;
    while (true) {
        Eigen::MatrixXd t = T.topLeftCorner(m, m);
        t = 0.5 * (t + t.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        const Eigen::Index ritz = std::min(block, m);
        Eigen::MatrixXd y = es.eigenvectors().leftCols(ritz);
        Eigen::MatrixXd x = V.leftCols(m) * y;
        Eigen::MatrixXd r = W.leftCols(m) * y - x * es.eigenvalues().head(ritz).asDiagonal();

        last_residuals.assign(static_cast<std::size_t>(ritz), 0.0);
        bool converged = true;
        for (Eigen::Index j = 0; j < ritz; ++j) {
            last_residuals[static_cast<std::size_t>(j)] = r.col(j).norm();
            if (j < kk) {
                converged = converged && r.col(j).norm() <= opt.tolerance * std::max(1.0, std::abs(es.eigenvalues()(j)));
            }
        }
        if (converged) {
            EigenPairs out;
            out.method = "iterative";
            out.vectors = x.leftCols(kk);
            bool ok = true;
            for (Eigen::Index j = 0; j < kk; ++j) {
                fix_sign(out.vectors.col(j));
                out.values.push_back(es.eigenvalues()(j));
                Eigen::VectorXd hv = apply_real(op, s, out.vectors.col(j));
                out.residuals.push_back((hv - out.values.back() * out.vectors.col(j)).norm());
                ok = ok && out.residuals.back() <= opt.tolerance * std::max(1.0, std::abs(out.values.back()));
            }
            if (ok) {
                return out;
            }
            // the cached products drifted from the true ones; rebuild them
            for (Eigen::Index j = 0; j < m; ++j) {
                W.col(j) = apply_real(op, s, V.col(j));
                ++matvecs;
            }
            T.topLeftCorner(m, m) = V.leftCols(m).transpose() * W.leftCols(m);
            continue;
        }
        if (matvecs >= opt.max_matvecs) {
            last_residuals.resize(k);
            throw NumericalFailure("iterative eigensolver did not converge within " +
                                       std::to_string(opt.max_matvecs) + " operator applications",
                                   last_residuals);
        }
        if (m + ritz > cap) {
            // thick restart on the lowest Ritz vectors
            const Eigen::Index kept = std::min(keep, m);
            Eigen::MatrixXd yk = es.eigenvectors().leftCols(kept);
            Eigen::MatrixXd vk = V.leftCols(m) * yk;
            Eigen::MatrixXd wk = W.leftCols(m) * yk;
            V.leftCols(kept) = vk;
            W.leftCols(kept) = wk;
            T.topLeftCorner(kept, kept) = yk.transpose() * t * yk;
            m = kept;
        }
        // expand with the residual block, then with H applied to the newest block
        Eigen::Index first = m;
        for (Eigen::Index j = 0; j < ritz && m < cap; ++j) {
            if (r.col(j).norm() > 1e-14 * std::max(1.0, std::abs(es.eigenvalues()(j)))) {
                push(r.col(j));
            }
        }
        if (m == first && m < cap) {
            push(random_vector());
        }
        for (int step = 1; step < opt.lanczos_blocks && m < cap; ++step) {
            const Eigen::Index last = m;
            for (Eigen::Index j = first; j < last && m < cap; ++j) {
                push(W.col(j));
            }
            if (m == last) {
                break;
            }
            first = last;
        }
    }
}

} // namespace detail

/// The k lowest eigenpairs of op at s, ascending.
template <InterpolatedOperator Op>
EigenPairs lowest_eigenpairs(const Op &op, double s, std::size_t k, const EigenOptions &options = {}) {
    const std::size_t dim = op.dimension();
    if (k == 0 || k > dim) {
        throw Error(ErrorKind::InvalidArgument,
                    "requested " + std::to_string(k) + " eigenpairs of a " + std::to_string(dim) + "-dimensional operator");
    }
    if (dim <= options.dense_limit || dim <= k + 4) {
        return detail::dense_eigenpairs(op, s, k, options.vectors);
    }
    return detail::iterative_eigenpairs(op, s, k, options);
}

} // namespace adiaquant
