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
 * Closed-form spectrum of the all-agree ring in the G = +1 sector.
 *
 * After a Jordan-Wigner transformation with antiperiodic fermions the ring
 * splits into 2x2 blocks A_p(s), one for each odd p in 1..n-1, with
 *
 *     E_p^(+-)(s) = 2 - s +- sqrt((2 - 3s)^2 + 4 s (1 - s)(1 - cos(pi p / n))).
 *
 * The ground level fills every block's lower state; the first excited level
 * promotes the p = 1 block.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "adiaquant/common.hpp"

namespace adiaquant {

namespace detail {

inline void check_ring_block(unsigned n, unsigned p) {
    if (n < 2 || n % 2 != 0) {
        throw Error(ErrorKind::InvalidArgument, "the analytic ring needs an even n >= 2, got " + std::to_string(n));
    }
    if (p % 2 == 0 || p < 1 || p > n - 1) {
        throw Error(ErrorKind::InvalidArgument, "momentum index p must be odd in 1.." + std::to_string(n - 1));
    }
}

inline double ring_discriminant(unsigned n, unsigned p, double s) {
    const double c = 1.0 - std::cos(std::numbers::pi * p / n);
    return (2.0 - 3.0 * s) * (2.0 - 3.0 * s) + 4.0 * s * (1.0 - s) * c;
}

} // namespace detail

/// (E_p^-, E_p^+).
inline std::pair<double, double> block_eigenvalues(unsigned n, unsigned p, double s) {
    detail::check_ring_block(n, p);
    if (s < 0.0 || s > 1.0) {
        throw Error(ErrorKind::InvalidArgument, "s must lie in [0, 1]");
    }
    const double r = std::sqrt(detail::ring_discriminant(n, p, s));
    return {2.0 - s - r, 2.0 - s + r};
}

/// A_p(s) over the {|Omega_p>, |Sigma_p>} pair.
inline Eigen::Matrix2cd block_matrix(unsigned n, unsigned p, double s) {
    detail::check_ring_block(n, p);
    const double c = std::cos(std::numbers::pi * p / n);
    const double sn = std::sin(std::numbers::pi * p / n);
    const std::complex<double> i{0.0, 1.0};
    Eigen::Matrix2cd a;
    a << s + s * c, i * s * sn, -i * s * sn, 4.0 - 3.0 * s - s * c;
    return a;
}

/// (ground energy, first excited energy) at s.
inline std::pair<double, double> ring_levels(unsigned n, double s) {
    double ground = 0.0;
    double lowest_minus = 0.0, lowest_plus = 0.0;
    for (unsigned p = 1; p < n; p += 2) {
        auto [lo, hi] = block_eigenvalues(n, p, s);
        ground += lo;
        if (p == 1) {
            lowest_minus = lo;
            lowest_plus = hi;
        }
    }
    return {ground, ground - lowest_minus + lowest_plus};
}

/// E_1^+(s) - E_1^-(s).
inline double ring_gap_at(unsigned n, double s) { return 2.0 * std::sqrt(detail::ring_discriminant(n, 1, s)); }

struct RingGap {
    unsigned n = 0;
    double g_min = 0.0;
    double s_star = 0.0;
};

/// Golden-section minimum of the ring gap, started on a bracket around s = 2/3.
inline RingGap ring_gap(unsigned n, double resolution = 1e-12) {
    detail::check_ring_block(n, 1);
    if (n < 4) {
        throw Error(ErrorKind::InvalidArgument, "ring_gap needs n >= 4");
    }
    double a = 2.0 / 3.0 - 0.25, b = 2.0 / 3.0 + 0.25;
    auto g = [n](double s) { return ring_gap_at(n, s); };
    // widen until the minimum is interior (the gap is a convex function's square root)
    while (a > 0.0 && g(a) <= g(a + 1e-3)) {
        a = std::max(0.0, a - 0.25);
    }
    while (b < 1.0 && g(b) <= g(b - 1e-3)) {
        b = std::min(1.0, b + 0.25);
    }
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double gc = g(c), gd = g(d);
    while (b - a > resolution) {
        if (gc <= gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + phi * (b - a);
            gd = g(d);
        }
    }
    const double s = 0.5 * (a + b);
    return RingGap{n, g(s), s};
}

/// CSV n,g_min,s_star.
inline void write_ring_csv(std::ostream &os, const std::vector<RingGap> &rows) {
    os << "n,g_min,s_star\n";
    char buf[96];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%u,%.15g,%.15g\n", r.n, r.g_min, r.s_star);
        os << buf;
    }
}

} // namespace adiaquant
